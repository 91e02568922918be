// Command-line front end: enumeration, theorem verification, Hasse diagram
// export, the (2,2) counterexample, and single-permutation membership
// checks. Exit codes: 0 pass, 1 verified-false, 2 usage/bounds/parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "anc/annular.hpp"

namespace {

using nlohmann::json;

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

struct EnumerateArgs {
  std::string type;
  int p = 0, q = 0;
  std::string format = "text";
};

int run_enumerate(const EnumerateArgs& args, const std::string& output) {
  std::string body;
  json items = json::array();
  long long count = 0;
  if (args.type == "B-perm" || args.type == "D-perm") {
    const auto& perms = args.type == "B-perm" ? anc::noncrossing_perms_B(args.p, args.q)
                                              : anc::noncrossing_perms_D(args.p, args.q);
    count = static_cast<long long>(perms.size());
    for (const auto& tau : perms) {
      if (args.format == "json")
        items.push_back(anc::cycle_string(tau));
      else
        body += anc::cycle_string(tau) + "\n";
    }
  } else {
    const auto& parts = args.type == "B-part" ? anc::noncrossing_partitions_B(args.p, args.q)
                                              : anc::noncrossing_partitions_D(args.p, args.q);
    count = static_cast<long long>(parts.size());
    for (const auto& part : parts) {
      if (args.format == "json")
        items.push_back(json::parse(part.json()));
      else
        body += part.to_string() + "\n";
    }
  }
  if (args.format == "json") {
    json doc;
    doc["type"] = args.type;
    doc["p"] = args.p;
    doc["q"] = args.q;
    doc["count"] = count;
    doc["items"] = items;
    return write_output(output, doc.dump(2) + "\n");
  }
  std::cerr << "count: " << count << "\n";
  return write_output(output, body);
}

int emit_report(const anc::VerificationReport& report, const std::string& format,
                const std::string& output) {
  const std::string body =
      format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  const int io = write_output(output, body);
  if (io != 0) return io;
  return report.passed ? 0 : 1;
}

struct HasseArgs {
  std::string poset;
  int p = 0, q = 0;
  std::string format = "dot";
};

int run_hasse(const HasseArgs& args, const std::string& output) {
  std::vector<std::string> keys, labels;
  std::function<bool(size_t, size_t)> leq;
  std::vector<anc::SignedPartition> parts;
  std::vector<anc::SignedPermutation> perms;
  if (args.poset == "interval") {
    perms = anc::noncrossing_perms_B(args.p, args.q);
    for (const auto& tau : perms) {
      keys.push_back(anc::cycle_string(tau));
      labels.push_back(anc::compact_cycle_string(tau));
    }
    leq = [&perms](size_t a, size_t b) { return anc::absolute_le(perms[a], perms[b]); };
  } else {
    parts = args.poset == "ncb" ? anc::noncrossing_partitions_B(args.p, args.q)
                                : anc::noncrossing_partitions_D(args.p, args.q);
    for (const auto& part : parts) {
      keys.push_back(part.to_string());
      labels.push_back(part.compact_string());
    }
    leq = [&parts](size_t a, size_t b) { return anc::refinement_le(parts[a], parts[b]); };
  }
  const anc::FinitePoset poset = anc::FinitePoset::build(keys, leq);
  if (args.format == "json") return write_output(output, poset.json() + "\n");
  return write_output(output, poset.dot([&](size_t i) { return labels[i]; }));
}

int run_counterexample(const std::string& format, const std::string& output) {
  const anc::VerificationReport report = anc::lattice_counterexample_22();
  if (format == "json") return emit_report(report, format, output);

  const anc::AnnulusConfig cfg = anc::AnnulusConfig::make(2, 2);
  const auto sigma = anc::parse_cycles("(1,2,3,4)(-1,-2,-3,-4)", 4);
  const auto tau = anc::parse_cycles("(1,-4,3,-2)(-1,4,-3,2)", 4);
  const auto sigma_o = anc::parse_cycles("(1,3)(-1,-3)", 4);
  const auto tau_o = anc::parse_cycles("(2,4)(-2,-4)", 4);
  const auto pi = anc::orbit_partition(sigma);
  const auto rho = anc::orbit_partition(tau);
  const auto pi_o = anc::orbit_partition(sigma_o);
  const auto rho_o = anc::orbit_partition(tau_o);

  std::string body = "why NC^B(2,2) is not a lattice\n";
  body += "pi    = Omega(" + anc::cycle_string(sigma) + ") = " + pi.to_string() + "\n";
  body += "rho   = Omega(" + anc::cycle_string(tau) + ") = " + rho.to_string() + "\n";
  body += "pi_o  = Omega(" + anc::cycle_string(sigma_o) + ") = " + pi_o.to_string() + "\n";
  body += "rho_o = Omega(" + anc::cycle_string(tau_o) + ") = " + rho_o.to_string() + "\n";
  body += "all four lie in NC^B(2,2); pi_o and rho_o are lower bounds of {pi, rho}\n";
  body += "no nu in NC^B(2,2) satisfies pi_o, rho_o <= nu <= pi, rho\n";
  const auto nu = anc::meet(pi, rho);
  body += "intersection meet pi ^ rho = " + nu.to_string() + " (not in NC^B(2,2))\n";
  const auto from_meet = anc::permutation_from_blocks(nu, cfg);
  body += "canonical permutation of the meet: " + anc::cycle_string(from_meet) + "\n";
  const auto pattern = anc::find_crossing_pattern(anc::to_ground(from_meet), cfg.gamma);
  body += "crossing pattern: " + (pattern ? pattern->json() : std::string("none")) + "\n";
  body += std::string("verdict: ") + (report.passed ? "PASSED" : "FAILED") + "\n";
  const int io = write_output(output, body);
  if (io != 0) return io;
  return report.passed ? 0 : 1;
}

struct CheckArgs {
  std::string perm;
  int p = 0, q = 0;
  std::string format = "text";
};

int run_check(const CheckArgs& args, const std::string& output) {
  if (args.p < 1 || args.q < 1) {
    std::cerr << "p and q must be positive integers\n";
    return 2;
  }
  const int n = args.p + args.q;
  anc::SignedPermutation tau(n);
  try {
    tau = anc::parse_cycles(args.perm, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  const anc::AnnulusConfig cfg = anc::AnnulusConfig::make(args.p, args.q);
  const anc::GroundPermutation ground = anc::to_ground(tau);
  const int g = anc::genus(ground, cfg.gamma);
  const bool by_genus = g == 0;
  const auto incompatible = anc::check_compatible(ground, cfg.gamma);
  std::optional<anc::CrossingWitness> pattern;
  if (!incompatible) pattern = anc::find_crossing_pattern(ground, cfg.gamma);
  const bool by_patterns = !incompatible && !pattern;
  const bool below_gamma = anc::absolute_le(tau, cfg.reference_perm());

  std::string witness_json;
  if (incompatible)
    witness_json = incompatible->json();
  else if (pattern)
    witness_json = pattern->json();

  std::string body;
  if (args.format == "json") {
    json doc;
    doc["permutation"] = anc::cycle_string(tau);
    doc["p"] = args.p;
    doc["q"] = args.q;
    doc["genus"] = g;
    doc["member_by_genus"] = by_genus;
    doc["member_by_patterns"] = by_patterns;
    doc["le_gamma"] = below_gamma;
    doc["witness"] = witness_json.empty() ? json() : json::parse(witness_json);
    body = doc.dump(2) + "\n";
  } else {
    body = "permutation: " + anc::cycle_string(tau) + "\n";
    body += "genus: " + std::to_string(g) + "\n";
    body += std::string("pattern test: ") + (by_patterns ? "non-crossing" : "crossing") + "\n";
    if (!witness_json.empty()) body += "witness: " + witness_json + "\n";
    body += std::string("interval test: ") +
            (below_gamma ? "tau <= gamma" : "tau is not below gamma") + "\n";
    body += std::string("verdict: ") +
            (by_genus ? "member" : "not a member") + " of S^B_nc(" + std::to_string(args.p) +
            "," + std::to_string(args.q) + ")\n";
  }
  const int io = write_output(output, body);
  if (io != 0) return io;
  return by_genus ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"annular non-crossing permutations and partitions of types B and D"};
  app.require_subcommand(1);
  app.fallthrough();

  int bound = 0, jobs = 0;
  std::string output;
  app.add_option("--bound", bound, "override the exhaustive p+q bound (default 5)");
  app.add_option("--jobs", jobs, "worker threads for pair scans (default 1)");
  app.add_option("--output", output, "write stdout payload to FILE");

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand("enumerate", "list S^B_nc/NC^B (or type D) members");
  cmd_enum->add_option("--type", enum_args.type, "B-perm, B-part, D-perm or D-part")
      ->required()
      ->check(CLI::IsMember({"B-perm", "B-part", "D-perm", "D-part"}));
  cmd_enum->add_option("-p", enum_args.p, "outer circle size")->required();
  cmd_enum->add_option("-q", enum_args.q, "inner circle size")->required();
  cmd_enum->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "json"}));

  std::string verify_theorem, verify_format = "text";
  int verify_p = 0, verify_q = 0, verify_n = 0;
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem verifier");
  cmd_verify->add_option("theorem", verify_theorem, "t1, t2, t3 or d")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "d"}));
  cmd_verify->add_option("-p", verify_p, "outer circle size");
  cmd_verify->add_option("-q", verify_q, "inner circle size");
  cmd_verify->add_option("-n", verify_n, "rank for t3 (q = 1)");
  cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  HasseArgs hasse_args;
  auto* cmd_hasse = app.add_subcommand("hasse", "export a Hasse diagram");
  cmd_hasse->add_option("--poset", hasse_args.poset, "ncb, ncd or interval")
      ->required()
      ->check(CLI::IsMember({"ncb", "ncd", "interval"}));
  cmd_hasse->add_option("-p", hasse_args.p, "outer circle size")->required();
  cmd_hasse->add_option("-q", hasse_args.q, "inner circle size")->required();
  cmd_hasse->add_option("--format", hasse_args.format)->check(CLI::IsMember({"dot", "json"}));

  std::string counter_format = "text";
  auto* cmd_counter = app.add_subcommand("counterexample", "reproduce the (2,2) counterexample");
  cmd_counter->add_option("--format", counter_format)->check(CLI::IsMember({"text", "json"}));

  CheckArgs check_args;
  auto* cmd_check = app.add_subcommand("check", "membership test for one permutation");
  cmd_check->add_option("perm", check_args.perm, "cycle notation, e.g. \"(1,2,3,5)(4,-6)\"")
      ->required();
  cmd_check->add_option("-p", check_args.p, "outer circle size")->required();
  cmd_check->add_option("-q", check_args.q, "inner circle size")->required();
  cmd_check->add_option("--format", check_args.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bound != 0) anc::set_verifier_bound(bound);
    if (jobs != 0) anc::set_worker_count(jobs);

    if (cmd_enum->parsed()) return run_enumerate(enum_args, output);
    if (cmd_hasse->parsed()) return run_hasse(hasse_args, output);
    if (cmd_counter->parsed()) return run_counterexample(counter_format, output);
    if (cmd_check->parsed()) return run_check(check_args, output);
    if (cmd_verify->parsed()) {
      if (verify_theorem == "t3") {
        if (verify_n == 0) {
          std::cerr << "t3 requires -n\n";
          return 2;
        }
        return emit_report(anc::verify_lattice_B(verify_n), verify_format, output);
      }
      if (verify_p == 0 || verify_q == 0) {
        std::cerr << verify_theorem << " requires -p and -q\n";
        return 2;
      }
      if (verify_theorem == "t1")
        return emit_report(anc::verify_interval(verify_p, verify_q), verify_format, output);
      if (verify_theorem == "t2")
        return emit_report(anc::verify_order_iso(verify_p, verify_q), verify_format, output);
      return emit_report(anc::verify_type_D(verify_p, verify_q), verify_format, output);
    }
  } catch (const anc::BoundError& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
