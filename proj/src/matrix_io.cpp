#include "numrad/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace numrad {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("matrix json: " + what);
}

std::size_t require_dimension(const json& j, const char* key) {
    if (!j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0)
        fail(std::string("field \"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

} // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        // parse_error for malformed text, out_of_range for number overflow
        fail(e.what());
    }
    if (!j.is_object()) fail("top level must be an object");
    const std::size_t rows = require_dimension(j, "rows");
    const std::size_t cols = require_dimension(j, "cols");
    if (!j.contains("entries")) fail("missing field \"entries\"");
    const json& entries = j.at("entries");
    if (!entries.is_array()) fail("field \"entries\" must be an array");
    if (entries.size() != rows * cols) {
        std::ostringstream msg;
        msg << "expected " << rows * cols << " entries for a " << rows << "x" << cols
            << " matrix, got " << entries.size();
        fail(msg.str());
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            std::ostringstream msg;
            msg << "entry " << k << " must be a [re, im] pair of numbers";
            fail(msg.str());
        }
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            std::ostringstream msg;
            msg << "entry " << k << " is not finite";
            fail(msg.str());
        }
        m(k / cols, k % cols) = cplx(re, im);
    }
    return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            entries.push_back({m(i, k).real(), m(i, k).imag()});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ComplexMatrix load_matrix_file(const std::string& path) {
    try {
        return parse_matrix_json(read_text_file(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

} // namespace numrad
