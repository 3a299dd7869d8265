#pragma once

// JSON renderings of the report types. Every stream starts with a header
// object carrying the schema version.

#include <string>
#include <string_view>

#include <json.hpp>

#include "charsum/cyclotomy.hpp"
#include "charsum/expsum.hpp"
#include "charsum/field.hpp"
#include "charsum/jacobsthal.hpp"
#include "charsum/walsh.hpp"

namespace charsum::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "charsum/1";

inline json header(std::string_view command, const FieldParams& params, const FieldCtx& ctx, u64 seed) {
  json h;
  h["schema"] = kSchema;
  h["command"] = command;
  h["p"] = params.p;
  h["k"] = params.k;
  h["n"] = params.n();
  h["d"] = params.d();
  h["field_degree"] = ctx.m();
  h["modulus"] = ctx.modulus();
  h["seed"] = seed;
  return h;
}

inline json to_json(const FieldCtx& F, const JacobsthalRecord& r) {
  json j;
  j["a"] = F.format_log(r.a);
  j["H"] = r.H;
  j["I"] = r.I;
  j["I2"] = r.I2;
  j["curve_N"] = r.curve_N ? json(*r.curve_N) : json(nullptr);
  j["bound_ratio"] = r.bound_ratio;
  return j;
}

inline json to_json(const FieldCtx& F, const ExpSumRecord& r) {
  json j;
  j["a"] = F.format_log(r.pair.a);
  j["b"] = F.format_log(r.pair.b);
  j["tag"] = tag_name(r.tag);
  j["N"] = r.N;
  j["S0"] = r.S0;
  json w = json::array();
  for (Elem u : r.witnesses) w.push_back(F.format_log(u));
  j["witnesses"] = w;
  return j;
}

inline json to_json(const FieldCtx& F, const DistributionReport& r) {
  json j;
  j["b"] = F.format_log(r.b);
  j["b_character"] = r.b_character;
  j["r"] = r.r;
  j["s"] = r.s;
  j["t"] = r.t;
  json h = json::object();
  for (auto [n, c] : r.jac_histogram) h[std::to_string(n)] = c;
  j["jac_histogram"] = h;
  j["sum_S0"] = r.sum_s0;
  j["residuals"] = {{"count", r.count_residual}, {"weighted", r.weighted_residual}, {"sum", r.sum_residual}};
  j["pass"] = r.pass();
  return j;
}

inline json to_json(const FieldCtx& F, Elem y, const CycInt& z) {
  json j;
  j["y"] = F.format_log(y);
  j["coeff"] = z.coeffs();
  j["norm2"] = z.norm_squared_integer();
  return j;
}

inline json summary_json(const Spectrum& s) {
  json counts = json::object();
  for (const auto& [v, c] : s.summary) counts[v.to_string()] = c;
  json j;
  j["summary"] = counts;
  j["parseval_sum"] = s.parseval_sum;
  j["parseval_ok"] = s.parseval_ok;
  return j;
}

}  // namespace charsum::io
