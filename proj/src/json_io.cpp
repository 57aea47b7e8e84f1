#include "esfrac/json_io.hpp"

#include <nlohmann/json.hpp>

namespace esfrac::json_io {

using nlohmann::ordered_json;

namespace {

ordered_json int_value(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

Integer int_from(const ordered_json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  return Integer(j.get<std::string>());
}

}  // namespace

ordered_json to_json(const DecompRecord& rec) {
  ordered_json j;
  j["k"] = int_value(rec.k);
  j["n"] = int_value(rec.n);
  j["terms"] = ordered_json::array();
  for (const UnitTerm& t : rec.sum.terms) {
    ordered_json jt;
    jt["sign"] = t.sign;
    jt["den"] = t.den.get_str();
    j["terms"].push_back(std::move(jt));
  }
  j["family"] = rec.family;
  j["params"] = ordered_json::object();
  for (const auto& [key, value] : rec.params) j["params"][key] = value;
  j["verified"] = rec.verified;
  return j;
}

DecompRecord record_from_json(const ordered_json& j) {
  DecompRecord rec;
  rec.k = int_from(j.at("k"));
  rec.n = int_from(j.at("n"));
  rec.sum.target = make_rational(rec.k, rec.n);
  for (const auto& jt : j.at("terms"))
    rec.sum.terms.emplace_back(jt.at("sign").get<int>(), Integer(jt.at("den").get<std::string>()));
  rec.family = j.value("family", "oracle");
  rec.sum.provenance = rec.family;
  if (j.contains("params"))
    for (const auto& [key, value] : j.at("params").items()) rec.params[key] = value.get<std::string>();
  rec.verified = j.value("verified", false);
  return rec;
}

std::string to_string(const DecompRecord& rec) { return to_json(rec).dump(); }

DecompRecord record_from_string(const std::string& text) {
  return record_from_json(ordered_json::parse(text));
}

}  // namespace esfrac::json_io
