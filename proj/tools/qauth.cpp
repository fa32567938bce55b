// qauth: purity-testing code families and the authentication scheme built on
// them, exposed as a small deterministic command-line tool. Exit codes:
// 0 = checks pass, 1 = a verified property failed, 2 = usage/config error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <nlohmann/json.hpp>

#include "qauth/authproto.hpp"
#include "qauth/dense.hpp"
#include "qauth/densesim.hpp"
#include "qauth/ptcodes.hpp"
#include "qauth/serialize.hpp"

using json = nlohmann::json;
using qauth::Rational;
namespace ptc = qauth::ptcodes;
namespace ap = qauth::authproto;
namespace ds = qauth::densesim;
namespace dn = qauth::dense;
namespace sz = qauth::serialize;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;      // empty = stdout
  std::string format{"json"};
  bool no_timestamp = false;
  std::uint64_t seed = 0;

  void stamp(json& j) const {
    j["seed"] = seed;
    if (!no_timestamp) {
      const auto now = std::chrono::system_clock::now();
      const std::time_t t = std::chrono::system_clock::to_time_t(now);
      char buf[32];
      std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
      j["timestamp"] = buf;
    }
  }

  void emit_json(json j) const {
    stamp(j);
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
      std::cout << text;
    else
      sz::write_text_file(path, text);
  }

  void emit_text(const std::string& text) const {
    if (path.empty())
      std::cout << text;
    else
      sz::write_text_file(path, text);
  }
};

int exhaustive_cap() {
  int cap = ptc::kExhaustiveCap;
  if (const char* env = std::getenv("QAUTH_MAX_N")) {
    cap = std::min(std::atoi(env), ptc::kExhaustiveCap);
    if (cap < 1) cap = ptc::kExhaustiveCap;
  }
  return cap;
}

std::string verdict_str(ap::Verdict v) {
  return v == ap::Verdict::Accept ? "Accept" : "Reject";
}

// family ---------------------------------------------------------------

int cmd_family(int r, int s, const Output& out) {
  const ptc::PurityTestingFamily family = ptc::build_family(r, s);
  if (out.path.empty()) throw CLI::ValidationError("family", "--out is required");
  sz::save_family(family, out.path);
  json report{{"codes", family.code_count()},
              {"epsilon_bound", family.epsilon_bound().str()},
              {"n", family.n},
              {"m", family.m},
              {"key_bits", ap::key_bit_length(family)},
              {"out", out.path}};
  if (family.m == 0) report["degenerate"] = "m = 0: nothing to authenticate, family still valid";
  Output console = out;
  console.path.clear();
  console.emit_json(report);
  return kExitPass;
}

// epsilon --------------------------------------------------------------

int cmd_epsilon(const std::string& family_path, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  const int cap = exhaustive_cap();
  if (family.n > cap) {
    std::cerr << "error: exhaustive scan needs n <= " << cap << " (family has n = " << family.n
              << "); raise QAUTH_MAX_N up to 12\n";
    return kExitUsage;
  }
  const ptc::EpsilonReport report = ptc::epsilon_scan(family, cap);
  const Rational bound = family.epsilon_bound();
  const bool pass = report.epsilon <= bound;
  if (out.format == "csv") {
    std::string csv = "weight,max_undetected\n";
    for (std::size_t w = 0; w < report.worst_by_weight.size(); ++w) {
      csv += std::to_string(w + 1) + "," + std::to_string(report.worst_by_weight[w]) + "\n";
    }
    csv += "epsilon_exact," + report.epsilon.str() + "\n";
    csv += "bound," + bound.str() + "\n";
    csv += std::string("pass,") + (pass ? "true" : "false") + "\n";
    out.emit_text(csv);
  } else {
    json j{{"epsilon_exact", report.epsilon.str()},
           {"bound", bound.str()},
           {"max_undetected", report.max_undetected},
           {"worst_error", qauth::pauli::PauliVector::from_bits(family.n, report.worst_error).to_hex()},
           {"worst_by_weight", report.worst_by_weight},
           {"pass", pass}};
    out.emit_json(j);
  }
  return pass ? kExitPass : kExitFail;
}

// attack ---------------------------------------------------------------

int cmd_attack(const std::string& family_path, const std::string& error_spec, bool exhaustive,
               std::uint64_t key_seed, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  if (exhaustive) {
    const int cap = exhaustive_cap();
    if (family.n > cap) {
      std::cerr << "error: exhaustive attack scan needs n <= " << cap << "\n";
      return kExitUsage;
    }
    const ap::SoundnessWorstCase worst = ap::soundness_scan(family, cap);
    const ptc::EpsilonReport eps = ptc::epsilon_scan(family, cap);
    const bool agree = worst.max_corruption == eps.epsilon;
    json j{{"max_corruption", worst.max_corruption.str()},
           {"argmax_error", worst.argmax.to_hex()},
           {"argmax_error_text", worst.argmax.to_string()},
           {"epsilon_exact", eps.epsilon.str()},
           {"bound", family.epsilon_bound().str()},
           {"cross_check_pass", agree}};
    out.emit_json(j);
    return agree && worst.max_corruption <= family.epsilon_bound() ? kExitPass : kExitFail;
  }

  qauth::pauli::PauliVector error;
  if (error_spec.rfind("0x", 0) == 0 || error_spec.rfind("0X", 0) == 0) {
    error = qauth::pauli::PauliVector::from_hex(family.n, error_spec);
  } else {
    error = qauth::pauli::PauliVector::from_string(error_spec);
    if (error.n != family.n)
      throw CLI::ValidationError("attack", "error string length must equal n = " +
                                               std::to_string(family.n));
  }
  const ap::SoundnessReport report = ap::soundness_exact(family, error);
  const ap::AuthKey sampled = ap::keygen(key_seed, family);
  if (out.format == "csv") {
    std::string csv = "error,";
    for (int k = 0; k < family.code_count(); ++k) csv += "k" + std::to_string(k) + ",";
    csv += "corruption_probability\n" + error.to_hex() + ",";
    for (const auto& o : report.per_key) {
      csv += (o.verdict == ap::Verdict::Accept ? "A" : "R");
      csv += ",";
    }
    csv += report.corruption_probability.str() + "\n";
    out.emit_text(csv);
  } else {
    json per_key = json::array();
    for (int k = 0; k < family.code_count(); ++k) {
      const auto& o = report.per_key[k];
      json row{{"k", k}, {"verdict", verdict_str(o.verdict)}};
      if (o.verdict == ap::Verdict::Accept) row["logical_effect"] = o.logical_effect;
      per_key.push_back(std::move(row));
    }
    json j{{"error", error.to_hex()},
           {"error_text", error.to_string()},
           {"per_key", std::move(per_key)},
           {"corruption_probability", report.corruption_probability.str()},
           {"sampled_key", sz::key_to_json(sampled, family)}};
    out.emit_json(j);
  }
  return report.corruption_probability <= family.epsilon_bound() ? kExitPass : kExitFail;
}

// dense-verify ---------------------------------------------------------

int cmd_dense_verify(const std::string& family_path, const std::string& suite,
                     std::uint64_t seed, int cases, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  if (family.n > qauth::pauli::kDenseCap) {
    std::cerr << "error: dense suites need n <= " << qauth::pauli::kDenseCap << "\n";
    return kExitUsage;
  }
  const ap::SchemeDense scheme(family);
  std::mt19937_64 rng(seed);
  json case_rows = json::array();
  bool all_pass = true;
  const Eigen::Index dim_m = 1ll << family.m;

  if (suite == "completeness") {
    const dn::Vec message = dn::random_state(dim_m, rng);
    for (const ap::AuthKey& key : ap::all_keys(family)) {
      const auto result = ap::auth_verify(scheme, key, ap::auth_encode(scheme, key, message));
      const double fid = std::abs(message.dot(result.message));
      const bool pass = result.accept && fid > 1.0 - 1e-10;
      all_pass &= pass;
      if (!pass) {
        case_rows.push_back(json{{"k", key.k}, {"x", key.qotp}, {"y", key.y.bits},
                                 {"accept", result.accept}, {"fidelity", fid}});
      }
    }
    case_rows.push_back(json{{"keys_checked", ap::all_keys(family).size()}});
  } else if (suite == "pauli-equiv") {
    const int cap = exhaustive_cap();
    if (family.n > cap) {
      std::cerr << "error: pauli-equiv enumerates 4^n attacks; needs n <= " << cap << "\n";
      return kExitUsage;
    }
    const dn::Vec message = dn::random_state(dim_m, rng);
    std::uint64_t checked = 0;
    for (const ap::AuthKey& key : ap::all_keys(family)) {
      for (std::uint64_t v = 0; v < (1ull << (2 * family.n)); ++v) {
        const auto e = qauth::pauli::PauliVector::from_bits(family.n, v);
        const ap::AttackOutcome symbolic = ap::pauli_attack_analyze(family, key, e);
        dn::Vec received = ap::auth_encode(scheme, key, message);
        qauth::pauli::apply_pauli(e, received);
        const ap::VerifyResult dense_run = ap::auth_verify(scheme, key, received);
        bool pass = dense_run.accept == (symbolic.verdict == ap::Verdict::Accept);
        if (pass && dense_run.accept) {
          dn::Vec expected = message;
          if (family.m > 0)
            qauth::pauli::apply_pauli(
                qauth::pauli::PauliVector::from_bits(family.m, symbolic.logical_effect), expected);
          pass = std::abs(expected.dot(dense_run.message)) > 1.0 - 1e-9;
        }
        all_pass &= pass;
        ++checked;
        if (!pass)
          case_rows.push_back(json{{"k", key.k}, {"x", key.qotp}, {"y", key.y.bits},
                                   {"error", e.to_hex()}});
      }
    }
    case_rows.push_back(json{{"pairs_checked", checked}});
  } else if (suite == "random-unitary") {
    const double eps = ptc::epsilon_exact(family, exhaustive_cap()).to_double();
    const dn::Vec message = dn::random_state(dim_m, rng);
    for (int c = 0; c < cases; ++c) {
      const int ancilla = c % (dn::kAncillaCap + 1);
      const auto u = dn::haar_unitary(1ll << (family.n + ancilla), rng);
      const auto attack = dn::AdversaryChannel::from_unitary(u, family.n, ancilla);
      const double value = ds::soundness_measure(scheme, attack, message);
      const bool pass = value >= 1.0 - eps - 1e-9;
      all_pass &= pass;
      case_rows.push_back(json{{"case", c}, {"ancilla", ancilla}, {"value", value},
                               {"floor", 1.0 - eps}, {"pass", pass}});
    }
  } else if (suite == "encryption") {
    const Eigen::Index dim_n = 1ll << family.n;
    std::vector<dn::Vec> probes;
    probes.push_back(dn::Vec::Unit(dim_m, 0));
    probes.push_back(dn::Vec::Unit(dim_m, dim_m - 1));
    probes.push_back(dn::Vec::Constant(dim_m, 1.0 / std::sqrt((double)dim_m)));
    probes.push_back(dn::random_state(dim_m, rng));
    std::vector<dn::DensityMatrix> outs;
    for (const auto& p : probes) outs.push_back(ds::ciphertext_density(scheme, p));
    // entangled-with-reference probe: maximally entangled message/reference
    dn::Vec joint = dn::Vec::Zero(dim_m * dim_m);
    for (Eigen::Index i = 0; i < dim_m; ++i) joint[i + dim_m * i] = 1.0 / std::sqrt((double)dim_m);
    outs.push_back(ds::ciphertext_density_entangled(scheme, joint, family.m));
    const dn::DensityMatrix mixed = dn::DensityMatrix::maximally_mixed(dim_n);
    double worst = 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      worst = std::max(worst, dn::trace_distance(outs[i], mixed));
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        worst = std::max(worst, dn::trace_distance(outs[i], outs[j]));
      }
    }
    all_pass = worst < 1e-10;
    case_rows.push_back(json{{"probes", outs.size()}, {"max_trace_distance", worst}});
  } else if (suite == "fidelity-floor") {
    for (int c = 0; c < cases; ++c) {
      const int ancilla = c % (dn::kAncillaCap + 1);
      const auto u = dn::haar_unitary(1ll << (family.n + ancilla), rng);
      const auto attack = dn::AdversaryChannel::from_unitary(u, family.n, ancilla);
      const auto message = dn::DensityMatrix::pure(dn::random_state(dim_m, rng));
      const ds::FidelityFloorResult fr = ds::fidelity_floor_check(scheme, attack, message);
      const bool pass = fr.vacuous || fr.fidelity >= fr.floor - 1e-8;
      all_pass &= pass;
      case_rows.push_back(json{{"case", c}, {"fidelity", fr.fidelity}, {"p_acc", fr.p_acc},
                               {"floor", fr.floor}, {"vacuous", fr.vacuous}, {"pass", pass}});
    }
  } else {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }

  out.emit_json(json{{"suite", suite}, {"pass", all_pass}, {"cases", std::move(case_rows)}});
  return all_pass ? kExitPass : kExitFail;
}

// lowerbound -----------------------------------------------------------

int cmd_lowerbound(const std::string& demo, std::uint64_t seed, int cases, const Output& out) {
  std::mt19937_64 rng(seed);
  json rows = json::array();
  bool all_pass = true;

  if (demo == "phase-attack") {
    {
      dn::Mat zero = dn::Mat::Zero(2, 2), one = dn::Mat::Zero(2, 2);
      zero(0, 0) = 1.0;
      one(1, 1) = 1.0;
      const auto res = dn::phase_attack_demo(dn::DensityMatrix(zero), dn::DensityMatrix(one));
      const bool pass = std::abs(res.achieved - 1.0) < 1e-10 && std::abs(res.floor - 1.0) < 1e-10;
      all_pass &= pass;
      rows.push_back(json{{"case", "orthogonal-pures"}, {"lhs", res.achieved}, {"rhs", res.floor},
                          {"margin", res.achieved - res.floor}, {"pass", pass}});
    }
    for (int c = 0; c < cases; ++c) {
      const auto rho0 = dn::random_density(2, rng);
      const auto rho1 = dn::random_density(2, rng);
      const auto res = dn::phase_attack_demo(rho0, rho1);
      const bool pass = res.achieved >= res.floor - 1e-9;
      all_pass &= pass;
      rows.push_back(json{{"case", c}, {"lhs", res.achieved}, {"rhs", res.floor},
                          {"margin", res.achieved - res.floor}, {"pass", pass}});
    }
  } else if (demo == "tensor-power") {
    // diagonal qubit pair at exact trace distance 1/2
    dn::Mat a = dn::Mat::Zero(2, 2), b = dn::Mat::Zero(2, 2);
    a(0, 0) = 0.75;
    a(1, 1) = 0.25;
    b(0, 0) = 0.25;
    b(1, 1) = 0.75;
    const dn::DensityMatrix rho0(a), rho1(b);
    for (int t = 1; t <= 10; ++t) {
      const auto res = dn::tensor_power_distance_demo(rho0, rho1, t);
      const bool pass = res.bound <= 0.0 || res.distance >= res.bound - 1e-12;
      all_pass &= pass;
      rows.push_back(json{{"t", t}, {"lhs", res.distance}, {"rhs", res.bound},
                          {"margin", res.distance - res.bound}, {"pass", pass}});
    }
  } else if (demo == "product-soundness") {
    // minimal parameters fitting the dense cap for t = 2
    const ptc::PurityTestingFamily family = ptc::build_family(2, 1);
    const ap::SchemeDense scheme(family);
    const double eps = ptc::epsilon_exact(family).to_double();
    const double floor = 1.0 - 2.0 * eps - 1e-8;
    double worst_pauli = 1.0;
    for (std::uint64_t v = 0; v < (1ull << (4 * family.n)); ++v) {
      const auto e = qauth::pauli::PauliVector::from_bits(2 * family.n, v);
      const double value =
          ds::product_state_soundness(scheme, dn::AdversaryChannel::from_pauli(e), 2);
      worst_pauli = std::min(worst_pauli, value);
      if (value < floor) all_pass = false;
    }
    rows.push_back(json{{"case", "product-pauli-exhaustive"}, {"lhs", worst_pauli},
                        {"rhs", floor}, {"margin", worst_pauli - floor}});
    for (int c = 0; c < cases; ++c) {
      const int ancilla = c % (dn::kAncillaCap + 1);
      const auto u = dn::haar_unitary(1ll << (2 * family.n + ancilla), rng);
      const auto attack = dn::AdversaryChannel::from_unitary(u, 2 * family.n, ancilla);
      const double value = ds::product_state_soundness(scheme, attack, 2);
      const bool pass = value >= floor;
      all_pass &= pass;
      rows.push_back(json{{"case", c}, {"lhs", value}, {"rhs", floor},
                          {"margin", value - floor}, {"pass", pass}});
    }
  } else {
    std::cerr << "error: unknown demo '" << demo << "'\n";
    return kExitUsage;
  }

  out.emit_json(json{{"demo", demo}, {"pass", all_pass}, {"rows", std::move(rows)}});
  return all_pass ? kExitPass : kExitFail;
}

// keygen / encode / verify ----------------------------------------------

int cmd_keygen(const std::string& family_path, std::uint64_t seed, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  const ap::AuthKey key = ap::keygen(seed, family);
  if (out.path.empty()) throw CLI::ValidationError("keygen", "--out is required");
  sz::save_key(key, family, out.path);
  json j{{"out", out.path}, {"key_bits", ap::key_bit_length(family)}};
  Output console = out;
  console.path.clear();
  console.emit_json(j);
  return kExitPass;
}

int cmd_encode(const std::string& family_path, const std::string& key_path,
               const std::string& message_bits, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  const ap::AuthKey key = sz::load_key(key_path, family);
  if (static_cast<int>(message_bits.size()) > family.m)
    throw CLI::ValidationError("encode", "message longer than m = " + std::to_string(family.m));
  for (char c : message_bits)
    if (c != '0' && c != '1') throw CLI::ValidationError("encode", "message must be 0/1 bits");
  const int pad = family.m - static_cast<int>(message_bits.size());
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < message_bits.size(); ++i) {
    if (message_bits[i] == '1') index |= 1ull << i;  // qubit 0 leftmost; pad qubits stay |0>
  }
  const ap::SchemeDense scheme(family);
  dn::Vec message = dn::Vec::Zero(1ll << family.m);
  message[index] = 1.0;

  sz::Envelope env;
  env.r = family.r;
  env.s = family.s;
  env.pad = pad;
  env.key_commitment = sz::key_commitment(key, family);
  env.payload = ap::auth_encode(scheme, key, message);
  if (out.path.empty()) throw CLI::ValidationError("encode", "--out is required");
  sz::save_envelope(env, out.path);
  Output console = out;
  console.path.clear();
  console.emit_json(json{{"out", out.path}, {"pad", pad}, {"n", family.n}});
  return kExitPass;
}

int cmd_verify(const std::string& family_path, const std::string& key_path,
               const std::string& envelope_path, const Output& out) {
  const ptc::PurityTestingFamily family = sz::load_family(family_path);
  const ap::AuthKey key = sz::load_key(key_path, family);
  const sz::Envelope env = sz::load_envelope(envelope_path);
  if (env.r != family.r || env.s != family.s)
    throw CLI::ValidationError("verify", "envelope parameters do not match the family");
  json j;
  if (env.key_commitment != sz::key_commitment(key, family)) {
    j["warning"] = "envelope was not produced under this key file";
  }
  const ap::SchemeDense scheme(family);
  const ap::VerifyResult result = ap::auth_verify(scheme, key, env.payload);
  j["verdict"] = result.accept ? "Accept" : "Reject";
  j["observed_syndrome"] = result.observed.bits;
  // recover a basis-state message when that is what came out
  std::string bits;
  int hits = 0;
  Eigen::Index where = 0;
  for (Eigen::Index i = 0; i < result.message.size(); ++i) {
    if (std::abs(result.message[i]) > 1e-6) {
      ++hits;
      where = i;
    }
  }
  if (hits == 1 && env.pad <= family.m) {
    for (int q = 0; q < family.m - env.pad; ++q) bits += (where >> q & 1) ? '1' : '0';
    j["message"] = bits;
  }
  out.emit_json(j);
  return result.accept ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"purity-testing code families and non-interactive quantum authentication"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--seed", out.seed, "PRNG seed, echoed into every report");
  app.add_option("--out", out.path, "output file (default: stdout)");
  app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timestamp", out.no_timestamp, "omit the timestamp field");

  int r = 2, s = 2, cases = 100;
  std::string family_path, error_spec, suite, demo, key_path, envelope_path, message_bits;
  bool exhaustive = false;
  std::uint64_t key_seed = 0;

  auto* c_family = app.add_subcommand("family", "build a purity-testing family and write it");
  c_family->add_option("--r", r, "curve parameter r >= 1")->required();
  c_family->add_option("--s", s, "security parameter s >= 1")->required();

  auto* c_eps = app.add_subcommand("epsilon", "exhaustive purity-testing error of a family");
  c_eps->add_option("--family", family_path)->required()->check(CLI::ExistingFile);

  auto* c_attack = app.add_subcommand("attack", "per-key verdicts for a Pauli attack");
  c_attack->add_option("--family", family_path)->required()->check(CLI::ExistingFile);
  c_attack->add_option("--error", error_spec, "Pauli string (IXZY...) or 0x-hex label");
  c_attack->add_flag("--exhaustive", exhaustive, "scan all errors, report the worst");
  c_attack->add_option("--key-seed", key_seed, "seed for the sampled key echoed in the report");

  auto* c_dense = app.add_subcommand("dense-verify", "dense verification suites");
  c_dense->add_option("--family", family_path)->required()->check(CLI::ExistingFile);
  c_dense->add_option("--suite", suite,
                      "completeness | pauli-equiv | random-unitary | encryption | fidelity-floor")
      ->required();
  c_dense->add_option("--cases", cases, "sampled cases where the suite samples");

  auto* c_lower = app.add_subcommand("lowerbound", "lower-bound lemma demonstrations");
  c_lower->add_option("--demo", demo, "phase-attack | tensor-power | product-soundness")
      ->required();
  c_lower->add_option("--cases", cases, "sampled cases");

  auto* c_keygen = app.add_subcommand("keygen", "derive a key file from a seed");
  c_keygen->add_option("--family", family_path)->required()->check(CLI::ExistingFile);

  auto* c_encode = app.add_subcommand("encode", "authenticate a basis-state message into an envelope");
  c_encode->add_option("--family", family_path)->required()->check(CLI::ExistingFile);
  c_encode->add_option("--key", key_path)->required()->check(CLI::ExistingFile);
  c_encode->add_option("--message", message_bits, "bit string, at most m bits; zero-padded")
      ->required();

  auto* c_verify = app.add_subcommand("verify", "check an envelope and decode it");
  c_verify->add_option("--family", family_path)->required()->check(CLI::ExistingFile);
  c_verify->add_option("--key", key_path)->required()->check(CLI::ExistingFile);
  c_verify->add_option("--in", envelope_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_family->parsed()) return cmd_family(r, s, out);
    if (c_eps->parsed()) return cmd_epsilon(family_path, out);
    if (c_attack->parsed()) {
      if (!exhaustive && error_spec.empty())
        throw CLI::ValidationError("attack", "need --error or --exhaustive");
      return cmd_attack(family_path, error_spec, exhaustive, key_seed, out);
    }
    if (c_dense->parsed()) return cmd_dense_verify(family_path, suite, out.seed, cases, out);
    if (c_lower->parsed()) return cmd_lowerbound(demo, out.seed, cases, out);
    if (c_keygen->parsed()) return cmd_keygen(family_path, out.seed, out);
    if (c_encode->parsed()) return cmd_encode(family_path, key_path, message_bits, out);
    if (c_verify->parsed()) return cmd_verify(family_path, key_path, envelope_path, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
