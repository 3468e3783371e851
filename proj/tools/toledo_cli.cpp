#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "toledo/cech.hpp"
#include "toledo/errors.hpp"
#include "toledo/report.hpp"
#include "toledo/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

int default_jobs() {
  if (const char* env = std::getenv("TOLEDO_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::logic_error&) {
      std::cerr << "warning: ignoring non-numeric TOLEDO_JOBS\n";
    }
  }
  return 1;
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw toledo::Error("cannot open output file '" + out_path + "'");
  out << text;
}

void print_star(const toledo::SeifertSignature& sig, long long t,
                const std::vector<long long>& t_res) {
  auto cert = toledo::star_certificate(sig, t, t_res);
  if (cert) {
    std::cout << "star: y=" << cert->y << " y_res=";
    for (std::size_t k = 0; k < cert->y_res.size(); ++k)
      std::cout << (k ? "," : "") << cert->y_res[k];
    std::cout << " s=";
    for (std::size_t k = 0; k < cert->s.size(); ++k)
      std::cout << (k ? "," : "") << cert->s[k];
    std::cout << (toledo::verify_star(sig, t, t_res, *cert) ? " (verified)"
                                                            : " (BROKEN)")
              << "\n";
  } else {
    std::cout << "star: none\n";
  }
  auto floor_cert = toledo::star_certificate_floorform(sig, t, t_res);
  if (floor_cert) {
    std::cout << "star (floor form): y=" << floor_cert->y << " y_res=";
    for (std::size_t k = 0; k < floor_cert->y_res.size(); ++k)
      std::cout << (k ? "," : "") << floor_cert->y_res[k];
    std::cout << "\n";
  } else {
    std::cout << "star (floor form): none\n";
  }
  if (static_cast<bool>(cert) != static_cast<bool>(floor_cert))
    throw toledo::Error("internal: star oracles disagree");
}

int run(int argc, char** argv) {
  CLI::App app{"Orbifold Toledo invariants of Seifert homology spheres"};
  app.require_subcommand(1);

  std::string sig_literal, format = "table", out_path;
  std::string group = "u21", family, a_literal, b_literal, divisor_literal;
  std::string sum_literal;
  std::size_t witness_cap = 100;
  long long margin_delta = 3;
  int jobs = default_jobs();
  long long d2 = -2, d1_max = 6, random_count = 0;
  std::uint64_t seed = 1;

  auto* cmd_enum = app.add_subcommand("enumerate", "Compute the Toledo spectrum");
  cmd_enum->add_option("--m", sig_literal, "signature, e.g. 2,3,11")->required();
  cmd_enum->add_option("--group", group, "u21 or pu21")
      ->check(CLI::IsMember({"u21", "pu21"}));
  cmd_enum->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd_enum->add_option("--witness-cap", witness_cap, "witnesses kept per value");
  cmd_enum->add_option("--margin-delta", margin_delta,
                       "bound-widening re-scan margin (0 skips)");
  cmd_enum->add_option("--jobs", jobs, "scan worker threads");
  cmd_enum->add_option("--out", out_path, "write the report to a file");

  auto* cmd_check = app.add_subcommand("check", "Check one parameter tuple");
  cmd_check->add_option("--family", family,
                        "stable-ternary, stable-binary or reducible-ternary")
      ->required()
      ->check(CLI::IsMember({"stable-ternary", "stable-binary",
                             "reducible-ternary"}));
  cmd_check->add_option("--m", sig_literal)->required();
  cmd_check->add_option("--a", a_literal, "divisor literal a:a1,...,an");
  cmd_check->add_option("--b", b_literal, "divisor literal b:b1,...,bn")
      ->required();

  auto* cmd_star = app.add_subcommand("star", "Divisibility-by-3 certificate");
  cmd_star->add_option("--m", sig_literal)->required();
  cmd_star->add_option("--sum", sum_literal, "pair-sum tuple t:t1,...,tn")
      ->required();

  auto* cmd_coh = app.add_subcommand("cohomology", "Line bundle cohomology");
  cmd_coh->add_option("--m", sig_literal)->required();
  cmd_coh->add_option("--divisor", divisor_literal, "divisor literal")
      ->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "Injectivity criterion scan");
  cmd_oracle->add_option("--d2", d2, "twist gap, <= -2")->required();
  cmd_oracle->add_option("--d1-max", d1_max, "scan ceiling for d1");
  cmd_oracle->add_option("--random", random_count,
                         "extra random sigma vectors for the necessity check");
  cmd_oracle->add_option("--seed", seed, "seed for the random vectors");
  cmd_oracle->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_oracle->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_enum->parsed()) {
    auto sig = toledo::parse_signature(sig_literal);
    toledo::SpectrumOptions opts;
    opts.witness_cap = witness_cap;
    opts.margin_delta = margin_delta;
    opts.jobs = jobs;
    std::cerr << "scanning signature (" << toledo::signature_literal(*sig)
              << "), group " << group << ", jobs " << jobs << "\n";
    auto report = toledo::toledo_spectrum(
        sig, group == "u21" ? toledo::GroupVariant::U21
                            : toledo::GroupVariant::PU21,
        opts);
    if (format == "json")
      write_out(toledo::report_to_json(report), out_path);
    else if (format == "csv")
      write_out(toledo::report_to_csv(report), out_path);
    else
      write_out(toledo::report_to_table(report), out_path);
    if (!report.margin_check_passed) {
      std::cerr << "error: completeness margin check failed\n";
      return kExitInconsistent;
    }
    return kExitOk;
  }

  if (cmd_check->parsed()) {
    auto sig = toledo::parse_signature(sig_literal);
    auto b = toledo::parse_divisor(sig, b_literal);
    toledo::Verdict verdict;
    toledo::FamilyWitness witness;
    if (family == "reducible-ternary") {
      verdict = toledo::check_reducible_ternary(b);
      witness = {toledo::Family::ReducibleTernary, std::nullopt, b};
    } else {
      if (a_literal.empty())
        throw toledo::ParseError("--a is required for the stable families");
      auto a = toledo::parse_divisor(sig, a_literal);
      if (family == "stable-ternary") {
        verdict = toledo::check_stable_ternary(a, b);
        witness = {toledo::Family::StableTernary, a, b};
      } else {
        verdict = toledo::check_stable_binary(a, b);
        witness = {toledo::Family::StableBinary, a, b};
      }
    }
    if (verdict.ok) {
      std::cout << "ok\n";
      auto tau = toledo::toledo_of_witness(witness);
      std::cout << "tau = " << toledo::fraction_string(tau) << " ("
                << toledo::decimal_string(tau) << ")\n";
      if (family != "reducible-ternary") {
        auto a = *witness.a_div;
        std::vector<long long> t_res(sig->multiplicities().size());
        for (std::size_t k = 0; k < t_res.size(); ++k)
          t_res[k] = a.residues()[k] + b.residues()[k];
        print_star(*sig, a.f_coeff() + b.f_coeff(), t_res);
      }
    } else {
      std::cout << "rejected\n";
      for (const auto& c : verdict.failed_conditions)
        std::cout << "failed: " << c << "\n";
    }
    return kExitOk;
  }

  if (cmd_star->parsed()) {
    auto sig = toledo::parse_signature(sig_literal);
    // Star inputs are raw pair sums; do not normalize them.
    auto colon = sum_literal.find(':');
    if (colon == std::string::npos)
      throw toledo::ParseError("--sum must look like 't:t1,...,tn'");
    long long t = 0;
    std::vector<long long> t_res;
    try {
      t = std::stoll(sum_literal.substr(0, colon));
      std::string tail = sum_literal.substr(colon + 1);
      std::size_t pos = 0;
      while (pos != std::string::npos) {
        auto next = tail.find(',', pos);
        t_res.push_back(std::stoll(tail.substr(pos, next - pos)));
        pos = next == std::string::npos ? next : next + 1;
      }
    } catch (const std::logic_error&) {
      throw toledo::ParseError("bad integer in '" + sum_literal + "'");
    }
    print_star(*sig, t, t_res);
    return kExitOk;
  }

  if (cmd_coh->parsed()) {
    auto sig = toledo::parse_signature(sig_literal);
    auto d = toledo::parse_divisor(sig, divisor_literal);
    auto dims = toledo::cohomology_dims(d);
    std::cout << "normalized: " << toledo::divisor_literal(d) << "\n";
    std::cout << "h0 = " << dims.h0 << "\n";
    std::cout << "h1 = " << dims.h1 << "\n";
    std::cout << "h0(twisted one-forms) = " << toledo::twisted_one_form_h0(d)
              << "\n";
    return kExitOk;
  }

  if (cmd_oracle->parsed()) {
    std::cerr << "scanning d2 = " << d2 << ", d1 <= " << d1_max << "\n";
    auto report = toledo::lemma_equivalence_scan(d2, d1_max, random_count, seed);
    if (format == "json")
      write_out(toledo::scan_to_json(report), out_path);
    else
      write_out(toledo::scan_to_table(report), out_path);
    if (report.mismatches != 0 || report.random_mismatches != 0) {
      std::cerr << "error: criterion/injectivity mismatch detected\n";
      return kExitInconsistent;
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const toledo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
