#include "eigmult/tensor_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace eigmult {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("tensor JSON is missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

template <class T>
T parse_value(const Json& v);

template <>
Rational parse_value<Rational>(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) throw InputError("float value in a rational tensor");
  throw InputError("rational entry value must be a \"p/q\" string");
}

template <>
double parse_value<double>(const Json& v) {
  if (!v.is_number()) throw InputError("float entry value must be a JSON number");
  return v.get<double>();
}

template <class T>
Tensor<T> read_entries(const Json& j, int m, int n) {
  Tensor<T> t(m, n);
  if (!j.contains("entries")) return t;
  const Json& es = j.at("entries");
  if (!es.is_array()) throw InputError("\"entries\" must be an array");
  std::set<std::size_t> seen;
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (const Json& e : es) {
    if (!e.is_object() || !e.contains("idx") || !e.contains("val"))
      throw InputError("each entry needs \"idx\" and \"val\"");
    const Json& ji = e.at("idx");
    if (!ji.is_array() || static_cast<int>(ji.size()) != m) throw InputError("entry index length must equal m");
    for (int k = 0; k < m; ++k) {
      if (!ji[k].is_number_integer()) throw InputError("entry index components must be integers");
      int v = ji[k].get<int>();
      if (v < 1 || v > n) throw InputError("entry index out of range 1..n");
      idx[k] = v - 1;
    }
    std::size_t lin = t.linear_index(idx);
    if (!seen.insert(lin).second) throw InputError("duplicate entry index");
    t[lin] = parse_value<T>(e.at("val"));
  }
  return t;
}

template <class T>
Json to_json_impl(const Tensor<T>& t, const char* scalar) {
  Json j;
  j["m"] = t.order();
  j["n"] = t.dim();
  j["scalar"] = scalar;
  if (t.kind() != TensorKind::General) j["kind"] = to_string(t.kind());
  Json es = Json::array();
  for (std::size_t lin = 0; lin < t.size(); ++lin) {
    if (is_zero(t[lin])) continue;
    Json idx = Json::array();
    for (int v : t.multi_index(lin)) idx.push_back(v + 1);
    Json e;
    e["idx"] = std::move(idx);
    if constexpr (std::is_same_v<T, Rational>) {
      e["val"] = to_string(t[lin]);
    } else {
      e["val"] = t[lin];
    }
    es.push_back(std::move(e));
  }
  j["entries"] = std::move(es);
  return j;
}

}  // namespace

TensorKind parse_kind(std::string_view text) {
  if (text == "general") return TensorKind::General;
  if (text == "symmetric") return TensorKind::Symmetric;
  if (text == "slice-symmetric") return TensorKind::SliceSymmetric;
  throw InputError("unknown tensor kind '" + std::string(text) + "'");
}

AnyTensor tensor_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("tensor JSON must be an object");
  int m = require_int(j, "m");
  int n = require_int(j, "n");
  if (m < 2) throw InputError("tensor order m must be at least 2");
  if (n < 1) throw InputError("tensor dimension n must be at least 1");
  if (n > 8 || m > 8) throw InputError("tensor shape exceeds supported size");
  std::string scalar = "rational";
  if (j.contains("scalar")) {
    if (!j.at("scalar").is_string()) throw InputError("\"scalar\" must be a string");
    scalar = j.at("scalar").get<std::string>();
  }
  TensorKind kind = TensorKind::General;
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) throw InputError("\"kind\" must be a string");
    kind = parse_kind(j.at("kind").get<std::string>());
  }
  if (scalar == "rational") {
    auto t = read_entries<Rational>(j, m, n);
    t.set_kind(kind);
    return t;
  }
  if (scalar == "float") {
    auto t = read_entries<double>(j, m, n);
    t.set_kind(kind);
    return t;
  }
  throw InputError("\"scalar\" must be \"rational\" or \"float\"");
}

AnyTensor parse_tensor(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return tensor_from_json(j);
}

AnyTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tensor file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tensor(ss.str());
}

Json tensor_to_json(const Tensor<Rational>& t) { return to_json_impl(t, "rational"); }
Json tensor_to_json(const Tensor<double>& t) { return to_json_impl(t, "float"); }

}  // namespace eigmult
