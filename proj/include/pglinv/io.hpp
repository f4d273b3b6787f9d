#pragma once

// JSON and TSV renderings used by the command-line tool.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pglinv/counting.hpp"
#include "pglinv/rational.hpp"
#include "pglinv/verify.hpp"

namespace pglinv {

using json = nlohmann::ordered_json;

inline json to_json(const ExtElt& x) { return {{"u", x.u().encode()}, {"v", x.v().encode()}, {"code", x.encode()}}; }

template <class E>
json poly_json(const Poly<E>& f) {
  return {{"text", to_string(f)}, {"coeffs", coeff_codes(f)}};
}

inline json field_json(const Field& f) {
  return {{"p", f.p()}, {"s", f.s()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

/// Classification of an arbitrary class, the identity included.
inline json classify_json(const Mat2& A) {
  const TypeInfo t = classify(A);
  json j{{"field", field_json(A.field())}, {"matrix", to_string(A)}, {"type", type_name(t)}};
  const auto param = type_parameter(t);
  j["parameter"] = param ? json(param->encode()) : json(nullptr);
  j["order"] = proj_order(A);
  if (std::holds_alternative<Identity>(t)) return j;
  const ReducedForm rf = reduce(A);
  j["reduced"] = to_string(rf.reduced);
  j["conjugator"] = to_string(rf.conjugator);
  j["eigenvalue"] = to_json(rf.eigenvalue);
  return j;
}

inline json to_json(const RationalMap& r) {
  return {{"num", poly_json(r.num)}, {"den", poly_json(r.den)}, {"degree", r.degree}};
}

inline json to_json(const QConstruction& qc, const Mat2& A) {
  json j = to_json(qc.map);
  j["type"] = type_name(qc.source.info);
  j["conjugator"] = to_string(qc.source.conjugator);
  j["fixed"] = is_fixed_by(qc.map, A);
  return j;
}

inline json to_json(const CountRow& r) {
  return {{"q", r.matrix.field().q()}, {"matrix", to_string(r.matrix)}, {"type", r.type}, {"D", r.D}, {"n", r.n},
          {"formula", r.formula}, {"bruteforce", r.brute}, {"criterion", r.criterion}, {"agree", r.agree()}};
}

inline json to_json(const PropertyResult& r) { return {{"property", r.name}, {"pass", r.pass}, {"detail", r.detail}}; }

inline const char* count_tsv_header() { return "q\tmatrix\ttype\tD\tn\tformula\tbruteforce\tcriterion\tagree"; }

inline std::string to_tsv(const CountRow& r) {
  std::ostringstream os;
  os << r.matrix.field().q() << '\t' << to_string(r.matrix) << '\t' << r.type << '\t' << r.D << '\t' << r.n << '\t'
     << r.formula << '\t' << r.brute << '\t' << r.criterion << '\t' << (r.agree() ? "yes" : "no");
  return os.str();
}

}  // namespace pglinv
