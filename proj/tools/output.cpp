#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace bomol::cli {

namespace {

std::string fmt(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string csv_cell(const Json& v) {
    if (v.is_number_float()) return fmt(v.get<double>(), 12);
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return "";
}

void emit(const Json& v, std::ostringstream& os, int indent) {
    const std::string pad(indent + 2, ' '), close(indent, ' ');
    if (v.is_object()) {
        if (v.empty()) { os << "{}"; return; }
        os << "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << pad << Json(it.key()).dump() << ": ";
            emit(it.value(), os, indent + 2);
        }
        os << "\n" << close << "}";
    } else if (v.is_array()) {
        if (v.empty()) { os << "[]"; return; }
        os << "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",\n";
            os << pad;
            emit(v[i], os, indent + 2);
        }
        os << "\n" << close << "]";
    } else if (v.is_number_float()) {
        const double d = v.get<double>();
        os << (std::isfinite(d) ? fmt(d, 17) : std::string("null"));
    } else {
        os << v.dump();
    }
}

} // namespace

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Json& doc) {
    std::ostringstream os;
    emit(doc, os, 0);
    os << "\n";
    return os.str();
}

Json table_rows(const Table& t) {
    Json arr = Json::array();
    for (const auto& r : t.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) o[t.columns[i]] = r[i];
        arr.push_back(o);
    }
    return arr;
}

std::string plot_series(const std::string& title, const std::vector<double>& x,
                        const std::vector<double>& y, const std::vector<double>& y_err) {
    std::ostringstream os;
    os << "# " << title << "\n# x y y_err\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        os << fmt(x[i], 12) << " " << fmt(y[i], 12) << " "
           << fmt(i < y_err.size() ? y_err[i] : 0.0, 12) << "\n";
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into " + path + ": " + ec.message());
    }
}

} // namespace bomol::cli
