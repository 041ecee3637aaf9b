#include "krein/instance_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace krein {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& j, Index rows, Index cols, const std::string& name) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw Error(ErrorCode::InvalidInput, name + " must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw Error(ErrorCode::InvalidInput,
                  name + " row " + std::to_string(r) + " must have " + std::to_string(cols) +
                      " entries");
    for (Index c = 0; c < cols; ++c) {
      const json& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
        throw Error(ErrorCode::InvalidInput,
                    name + " entries must be [re, im] pairs of numbers");
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json dump_matrix(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

BlockInstance instance_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("JSON parse failure: ") + e.what());
  }
  try {
    if (!j.contains("n0") || !j.contains("n1") || !j.contains("mode"))
      throw Error(ErrorCode::InvalidInput, "instance requires n0, n1 and mode");
    const Index n0 = j.at("n0").get<Index>();
    const Index n1 = j.at("n1").get<Index>();
    if (n0 < 1 || n1 < 1) throw Error(ErrorCode::InvalidInput, "n0 and n1 must be >= 1");
    const std::string mode_name = j.at("mode").get<std::string>();
    Mode mode;
    if (mode_name == "j_self_adjoint") {
      mode = Mode::JSelfAdjoint;
    } else if (mode_name == "general") {
      mode = Mode::General;
    } else {
      throw Error(ErrorCode::InvalidInput, "mode must be j_self_adjoint or general");
    }
    const Matrix a0 = parse_matrix(j.at("a0"), n0, n0, "a0");
    const Matrix a1 = parse_matrix(j.at("a1"), n1, n1, "a1");
    const Matrix b = parse_matrix(j.at("b"), n0, n1, "b");
    std::optional<Matrix> c;
    if (j.contains("c") && !j.at("c").is_null()) c = parse_matrix(j.at("c"), n1, n0, "c");
    return build_instance(a0, a1, b, c, mode);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad instance JSON: ") + e.what());
  }
}

BlockInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json_text(buffer.str());
}

std::string instance_to_json_text(const BlockInstance& inst) {
  json j;
  j["n0"] = inst.n0;
  j["n1"] = inst.n1;
  j["mode"] = inst.mode == Mode::JSelfAdjoint ? "j_self_adjoint" : "general";
  j["a0"] = dump_matrix(inst.a0);
  j["a1"] = dump_matrix(inst.a1);
  j["b"] = dump_matrix(inst.b);
  if (inst.mode == Mode::General) j["c"] = dump_matrix(inst.c);
  return j.dump(2);
}

void save_instance(const BlockInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << instance_to_json_text(inst) << "\n";
}

} // namespace krein
