#include "tenfold/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tenfold {

namespace {

using nlohmann::json;

double parse_double(const std::string& s) {
    double v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw SpecInvalid("csv: malformed number '" + s + "'");
    return v;
}

json entry_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

Complex entry_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SpecInvalid("matrix entry must be an [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::optional<AntiUnitaryOp> op_from_json(const json& j, Eigen::Index dim,
                                          const char* what) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_object() || !j.contains("w"))
        throw SpecInvalid(std::string(what) + ": expected {\"w\": matrix} or null");
    return AntiUnitaryOp(matrix_from_json(j.at("w"), dim, dim));
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw SpecInvalid("format_double: conversion failed");
    return std::string(buf, ptr);
}

nlohmann::json matrix_to_json(const Matrix& m) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            arr.push_back(entry_to_json(m(i, j)));
    return arr;
}

Matrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows,
                        Eigen::Index cols) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows * cols)
        throw SpecInvalid("matrix: expected a flat array of rows*cols pairs");
    Matrix m(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[k++]);
    return m;
}

nlohmann::json matrix_to_json_rows(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(entry_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json_rows(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw SpecInvalid("matrix: expected nested rows of [re, im] pairs");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[i].size()) != cols)
            throw SpecInvalid("matrix: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c]);
    }
    return m;
}

nlohmann::json symmetry_data_to_json(const SymmetryData& data) {
    json j;
    j["dim"] = data.dim;
    j["g0_generators"] = json::array();
    for (const Matrix& g : data.g0_generators)
        j["g0_generators"].push_back(matrix_to_json(g));
    j["t"] = data.t_op ? json{{"w", matrix_to_json(data.t_op->w)}} : json(nullptr);
    j["c"] = data.c_op ? json{{"w", matrix_to_json(data.c_op->w)}} : json(nullptr);
    j["chirality"] =
        data.chirality ? matrix_to_json(*data.chirality) : json(nullptr);
    j["nambu"] = data.nambu;
    return j;
}

SymmetryData symmetry_data_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("g0_generators"))
        throw SpecInvalid("symmetry data: missing dim or g0_generators");
    SymmetryData data;
    if (!j.at("dim").is_number_integer())
        throw SpecInvalid("symmetry data: dim must be an integer");
    data.dim = j.at("dim").get<Eigen::Index>();
    if (data.dim < 1) throw SpecInvalid("symmetry data: dim must be >= 1");
    const json& gens = j.at("g0_generators");
    if (!gens.is_array())
        throw SpecInvalid("symmetry data: g0_generators must be an array");
    for (const json& g : gens)
        data.g0_generators.push_back(matrix_from_json(g, data.dim, data.dim));
    if (j.contains("t")) data.t_op = op_from_json(j.at("t"), data.dim, "t");
    if (j.contains("c")) data.c_op = op_from_json(j.at("c"), data.dim, "c");
    if (j.contains("chirality") && !j.at("chirality").is_null())
        data.chirality = matrix_from_json(j.at("chirality"), data.dim, data.dim);
    if (j.contains("nambu")) {
        if (!j.at("nambu").is_boolean())
            throw SpecInvalid("symmetry data: nambu must be a boolean");
        data.nambu = j.at("nambu").get<bool>();
    }
    return data;
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    os << "i,j,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << format_double(m(i, j).real()) << ','
               << format_double(m(i, j).imag()) << '\n';
}

Matrix read_matrix_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "i,j,re,im")
        throw SpecInvalid("csv: missing 'i,j,re,im' header");
    struct Entry {
        Eigen::Index i, j;
        Complex v;
    };
    std::vector<Entry> entries;
    Eigen::Index rows = 0, cols = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fi, fj, fre, fim;
        if (!std::getline(ls, fi, ',') || !std::getline(ls, fj, ',') ||
            !std::getline(ls, fre, ',') || !std::getline(ls, fim))
            throw SpecInvalid("csv: malformed line '" + line + "'");
        Entry e;
        e.i = static_cast<Eigen::Index>(std::stoll(fi));
        e.j = static_cast<Eigen::Index>(std::stoll(fj));
        e.v = Complex(parse_double(fre), parse_double(fim));
        rows = std::max(rows, e.i + 1);
        cols = std::max(cols, e.j + 1);
        entries.push_back(e);
    }
    if (entries.empty()) throw SpecInvalid("csv: no entries");
    Matrix m = Matrix::Zero(rows, cols);
    for (const Entry& e : entries) m(e.i, e.j) = e.v;
    return m;
}

nlohmann::json classify_report_to_json(const ClassifyReport& report) {
    json j;
    j["schema_version"] = schema_version;
    j["nambu_route"] = report.nambu_route;
    j["blocks"] = json::array();
    for (const BlockReport& b : report.blocks) {
        json jb;
        jb["block_dim"] = b.block_dim;
        jb["irrep_dim"] = b.irrep_dim;
        jb["multiplicity"] = b.multiplicity;
        jb["class"] = to_string(b.cls);
        jb["epsilon"] = b.epsilon ? json(*b.epsilon) : json(nullptr);
        j["blocks"].push_back(std::move(jb));
    }
    return j;
}

}  // namespace tenfold
