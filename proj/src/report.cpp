#include "toledo/report.hpp"

#include <sstream>

#include "json.hpp"

#include "toledo/errors.hpp"

namespace toledo {

namespace {

using json = nlohmann::ordered_json;

std::optional<StarCertificate> witness_star(const FamilyWitness& w) {
  if (w.family != Family::StableTernary && w.family != Family::StableBinary)
    return std::nullopt;
  const SeifertSignature& sig = w.a_div->signature();
  long long t = w.a_div->f_coeff() + w.b_div->f_coeff();
  std::vector<long long> t_res(sig.multiplicities().size());
  for (std::size_t k = 0; k < t_res.size(); ++k)
    t_res[k] = w.a_div->residues()[k] + w.b_div->residues()[k];
  auto cert = star_certificate(sig, t, t_res);
  if (!cert || !verify_star(sig, t, t_res, *cert))
    throw Error("internal: star certificate failed to re-verify");
  return cert;
}

json star_json(const StarCertificate& c) {
  json j;
  j["y"] = c.y;
  j["y_res"] = c.y_res;
  j["s"] = c.s;
  return j;
}

json witness_json(const FamilyWitness& w) {
  json j;
  j["family"] = family_name(w.family);
  if (w.a_div) j["a"] = divisor_literal(*w.a_div);
  if (w.b_div) j["b"] = divisor_literal(*w.b_div);
  if (auto cert = witness_star(w)) j["star"] = star_json(*cert);
  return j;
}

std::string join(const std::vector<long long>& v, char sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out << sep;
    out << v[k];
  }
  return out.str();
}

}  // namespace

std::string report_to_json(const SpectrumReport& r, int indent) {
  json j;
  j["signature"] = r.sig->multiplicities();
  j["group"] = group_name(r.group);
  j["values"] = json::array();
  for (const auto& v : r.values) {
    json jv;
    jv["tau"] = fraction_string(v.tau);
    jv["tau_decimal"] = decimal_string(v.tau);
    jv["witnesses"] = json::array();
    for (const auto& w : v.witnesses) jv["witnesses"].push_back(witness_json(w));
    jv["direct_sign"] = v.direct_sign;
    j["values"].push_back(std::move(jv));
  }
  j["component_lower_bound"] = r.component_lower_bound;
  j["margin_check"] = r.margin_check_passed;
  return j.dump(indent) + "\n";
}

std::string report_to_csv(const SpectrumReport& r) {
  std::ostringstream out;
  out << "tau,family,a,b,star_y,star_yres,star_s\n";
  for (const auto& v : r.values)
    for (const auto& w : v.witnesses) {
      out << fraction_string(v.tau) << "," << family_name(w.family) << ",";
      if (w.a_div) out << divisor_literal(*w.a_div);
      out << ",";
      if (w.b_div) out << divisor_literal(*w.b_div);
      out << ",";
      if (auto cert = witness_star(w))
        out << cert->y << "," << join(cert->y_res, ';') << ","
            << join(cert->s, ';');
      else
        out << ",,";
      out << "\n";
    }
  return out.str();
}

std::string report_to_table(const SpectrumReport& r) {
  std::ostringstream out;
  out << "signature (" << signature_literal(*r.sig) << "), group "
      << group_name(r.group) << "\n";
  out << "distinct Toledo values: " << r.values.size()
      << " (component lower bound " << r.component_lower_bound << ")\n";
  out << "margin check: " << (r.margin_check_passed ? "passed" : "FAILED")
      << " (delta " << r.margin_delta_used << ")\n\n";
  out << "tau\tdecimal\tsign\twitnesses\tfirst witness\n";
  for (const auto& v : r.values) {
    out << fraction_string(v.tau) << "\t" << decimal_string(v.tau) << "\t"
        << v.direct_sign << "\t" << v.witness_count << "\t";
    if (!v.witnesses.empty()) {
      const auto& w = v.witnesses.front();
      out << family_name(w.family);
      if (w.a_div) out << " a=(" << divisor_literal(*w.a_div) << ")";
      if (w.b_div) out << " b=(" << divisor_literal(*w.b_div) << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string scan_to_json(const ScanReport& r, int indent) {
  json j;
  j["d2"] = r.d2;
  j["sigma"] = json::array();
  for (const auto& c : r.sigma) j["sigma"].push_back(fraction_string(c));
  j["cells"] = json::array();
  for (const auto& c : r.cells) {
    json jc;
    jc["d1"] = c.d1;
    jc["d3"] = c.d3;
    jc["predicate"] = c.predicate;
    jc["injective"] = c.injective;
    j["cells"].push_back(std::move(jc));
  }
  j["mismatches"] = r.mismatches;
  return j.dump(indent) + "\n";
}

std::string scan_to_table(const ScanReport& r) {
  std::ostringstream out;
  out << "d2 = " << r.d2 << ", sigma = (";
  for (std::size_t k = 0; k < r.sigma.size(); ++k) {
    if (k) out << ", ";
    out << fraction_string(r.sigma[k]);
  }
  out << ")\n";
  out << "cells: " << r.cells.size() << ", mismatches: " << r.mismatches;
  if (r.random_vectors)
    out << ", random vectors: " << r.random_vectors
        << ", random mismatches: " << r.random_mismatches;
  out << "\n";
  out << "d1\td3\tpredicate\tinjective\n";
  for (const auto& c : r.cells)
    out << c.d1 << "\t" << c.d3 << "\t" << (c.predicate ? "yes" : "no") << "\t"
        << (c.injective ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace toledo
