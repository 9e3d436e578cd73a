#include "ellgauss/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "ellgauss/error.hpp"
#include "ellgauss/modarith.hpp"

namespace ellgauss {

using report::json;

void RunConfig::validate() const {
  if (precision_bits < 64 || precision_bits > 4096)
    throw Error(ErrorKind::InvalidArgument, "precision must lie in [64, 4096]");
  if (max_precision < precision_bits) throw Error(ErrorKind::InvalidArgument, "max precision below start precision");
  if (lmax < 7) throw Error(ErrorKind::InvalidArgument, "lmax must be at least 7");
}

namespace {

PrimaryPrime admissible_prime(unsigned long ell) {
  if (!modp::is_prime(ell) || ell % 3 != 1)
    throw Error(ErrorKind::NotSplit, std::to_string(ell) + " is not a prime 1 mod 3");
  PrimaryPrime P = split_prime(mpz_class(ell));
  if (P.ell_mod9() == 1) throw Error(ErrorKind::UnsupportedResidueClass, std::to_string(ell) + " is 1 mod 9");
  return P;
}

void kv(std::ostream& os, const std::string& k, const std::string& v) { os << k << " = " << v << '\n'; }

std::string digits(const Real& x) { return x.to_decimal(12); }

}  // namespace

json verify_record(unsigned long ell, const RunConfig& cfg) {
  json rec{{"ell", ell}};
  if (!modp::is_prime(ell) || ell % 3 != 1) {
    rec["status"] = "skip";
    rec["reason"] = "not a split prime";
    return rec;
  }
  PrimaryPrime P = split_prime(mpz_class(ell));
  rec["lambda"] = report::eisenstein(P.lambda);
  if (P.ell_mod9() == 1) {
    rec["status"] = "skip";
    rec["reason"] = "excluded residue class";
    return rec;
  }
  try {
    AlphaResult a = alpha(P, cfg.policy());
    rec["alpha"] = report::eisenstein(a.alpha);
    rec["precision_used"] = a.precision_used;
    CongruenceReport cong = verify_main(P, a);
    rec["congruence"] = report::congruence_json(cong);

    CurveModel model = CurveModel::of(P);
    auto [cl, c3] = local_data_closed_form(P);
    LocalData tl = tate_algorithm(model, PrimeKind::Lambda);
    LocalData t3 = tate_algorithm(model, PrimeKind::OneMinusRho);
    bool tate_ok = tl.symbol() == cl.symbol() && tl.tamagawa == cl.tamagawa && t3.symbol() == c3.symbol() &&
                   t3.tamagawa == c3.tamagawa;
    rec["local_data"] = json{{"lambda", report::local_data_json(cl)},
                             {"one_minus_rho", report::local_data_json(c3)},
                             {"tate_agrees", tate_ok}};

    DeuReport deu = verify_deu(P, cfg.norm_bound);
    rec["deu"] = report::deu_json(deu, false);
    ShaPrediction sha = sha_prediction(P, a);
    rec["sha"] = report::sha_json(sha);
    MaincoReport mc = verify_mainco(P, sha);
    rec["mainco"] = report::mainco_json(mc);

    bool pass = cong.pass() && tate_ok && deu.pass() && sha.square_up_to_2_3 && mc.pass();
    rec["status"] = pass ? "pass" : "fail";
  } catch (const Error& e) {
    rec["status"] = "error";
    rec["error"] = e.what();
  }
  return rec;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  auto t = shared_table(67);
  out << report::render_tables(*t, cfg.format == report::Format::Text ? report::Format::Markdown : cfg.format);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<unsigned long> ells;
  for (unsigned long p : modp::primes_up_to(cfg.lmax))
    if (p % 3 == 1) ells.push_back(p);
  std::vector<json> records(ells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < ells.size(); i = next++) records[i] = verify_record(ells[i], cfg);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(ells.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool ok = true;
  if (cfg.format == report::Format::Csv) out << "ell,status,alpha,predicted_sha\n";
  for (const json& r : records) {
    const std::string status = r.at("status");
    ok = ok && (status == "pass" || status == "skip");
    if (cfg.format == report::Format::Csv) {
      out << r.at("ell").get<unsigned long>() << ',' << status << ',';
      if (r.contains("alpha")) out << report::parse_eisenstein(r.at("alpha")).to_string();
      out << ',';
      if (r.contains("sha")) out << r.at("sha").at("predicted_sha").get<std::string>();
      out << '\n';
    } else {
      out << r.dump() << '\n';
    }
  }
  return ok ? kExitPass : kExitFailure;
}

int cmd_gauss(const RunConfig& cfg, std::ostream& out) {
  PrimaryPrime P = admissible_prime(cfg.ell);
  AlphaResult a = alpha(P, cfg.policy());
  if (cfg.format == report::Format::Json) {
    out << report::alpha_json(a).dump(2) << '\n';
    return kExitPass;
  }
  kv(out, "ell", a.ell.get_str());
  kv(out, "lambda", a.lambda.to_string());
  kv(out, "alpha", a.alpha.to_string());
  kv(out, "alpha/unit", a.integer_part.get_str() + " with unit " + a.unit.to_string());
  kv(out, "|alpha|^2", a.alpha.norm().get_str());
  kv(out, "gauss_sum", a.gauss_sum.to_string(15));
  kv(out, "lambda_tilde", a.lambda_tilde.to_string(15));
  kv(out, "residual", digits(a.residual));
  kv(out, "lambda_tilde^3 rel error", digits(a.lambda_cube_rel_error));
  kv(out, "precision", std::to_string(a.precision_used) + " bits (+" + std::to_string(kGuardBits) + " guard)");
  return kExitPass;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  PrimaryPrime P = admissible_prime(cfg.ell);
  CurveModel model = CurveModel::of(P);
  json j{{"ell", cfg.ell}, {"model", model.w.to_string()}, {"discriminant", report::eisenstein(model.discriminant())}};
  bool agree = true;
  json counts = json::array();
  auto add_count = [&](const std::string& tag, const mpz_class& brute, const mpz_class& jac) {
    agree = agree && brute == jac;
    counts.push_back(json{{"prime", tag}, {"brute", report::integer(brute)}, {"jacobi", report::integer(jac)},
                          {"agree", brute == jac}});
  };
  auto count_at = [&](unsigned long p) {
    if (p % 3 == 2) {
      add_count("(-" + std::to_string(p) + ")", count_points_inert(P, p, CountMethod::Brute),
                count_points_inert(P, p, CountMethod::Jacobi));
    } else if (p % 3 == 1) {
      PrimaryPrime M = split_prime(mpz_class(p));
      for (const EisensteinInt& mu : {M.lambda, M.lambda.conj()}) {
        if (mu == P.lambda) continue;
        add_count("(" + mu.to_string() + ")", count_points_split(P, mu, CountMethod::Brute),
                  count_points_split(P, mu, CountMethod::Jacobi));
      }
    }
  };
  if (cfg.prime != 0) {
    if (!modp::is_prime(cfg.prime)) throw Error(ErrorKind::InvalidArgument, "--prime must be prime");
    count_at(cfg.prime);
  } else {
    for (unsigned long p : modp::primes_up_to(50)) count_at(p);
  }
  j["point_counts"] = counts;
  auto [cl, c3] = local_data_closed_form(P);
  LocalData tl = tate_algorithm(model, PrimeKind::Lambda), t3 = tate_algorithm(model, PrimeKind::OneMinusRho);
  j["local_data"] = json{{"closed_form", {report::local_data_json(cl), report::local_data_json(c3)}},
                         {"tate", {report::local_data_json(tl), report::local_data_json(t3)}}};
  TorsionReport tors = torsion(P);
  j["torsion_order"] = tors.order;

  if (cfg.format == report::Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    kv(out, "ell", std::to_string(cfg.ell));
    kv(out, "model", "y^2 + (" + P.lambda.to_string() + ") y = x^3");
    for (const auto& c : counts)
      out << "#E at " << c.at("prime").get<std::string>() << ": brute = " << c.at("brute").dump()
          << ", jacobi = " << c.at("jacobi").dump() << (c.at("agree").get<bool>() ? " (agree)" : " (MISMATCH)")
          << '\n';
    out << "(lambda): " << tl.symbol() << ", tamagawa " << tl.tamagawa << " | closed form " << cl.symbol() << ", "
        << cl.tamagawa << '\n';
    out << "(1-rho): " << t3.symbol() << ", tamagawa " << t3.tamagawa << " | closed form " << c3.symbol() << ", "
        << c3.tamagawa << '\n';
    kv(out, "torsion order", std::to_string(tors.order));
  }
  return agree ? kExitPass : kExitFailure;
}

int cmd_sha(const RunConfig& cfg, std::ostream& out) {
  PrimaryPrime P = admissible_prime(cfg.ell);
  AlphaResult a = alpha(P, cfg.policy());
  ShaPrediction s = sha_prediction(P, a);
  MaincoReport m = verify_mainco(P, s);
  if (cfg.format == report::Format::Json) {
    json j{{"ell", cfg.ell}, {"alpha", report::eisenstein(a.alpha)}, {"sha", report::sha_json(s)},
           {"mainco", report::mainco_json(m)}};
    out << j.dump(2) << '\n';
  } else {
    kv(out, "ell", std::to_string(cfg.ell));
    kv(out, "alpha", a.alpha.to_string());
    kv(out, "predicted_sha", s.predicted_sha.get_str() + " (" + kShaLabel + ")");
    kv(out, "tau", "inf " + digits(s.tau_infinity) + ", (lambda) " + std::to_string(s.tau_lambda) + ", (1-rho) " +
                       std::to_string(s.tau_one_minus_rho));
    kv(out, "torsion", std::to_string(s.torsion_order));
    kv(out, "rank", "0 (assumed)");
    kv(out, "L(1, chi)", s.l_value.hecke.to_string(15));
    kv(out, "L(E, 1)", digits(s.l_value.elliptic));
    kv(out, "mainco", std::string(m.pass() ? "pass" : "FAIL") + " [" + m.row + "], sha " + m.sha_residue.get_str() +
                          " vs " + m.rhs_residue.get_str() + " mod ell, index of <2,3> = " + std::to_string(m.index));
  }
  return m.pass() && s.square_up_to_2_3 ? kExitPass : kExitFailure;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernoulli-Hurwitz numbers, elliptic Gauss sums and the curves y^2 = x^3 + lambda^2/4"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", cfg.precision_bits, "starting precision in bits (default from ELLGAUSS_PREC)")
        ->check(CLI::Range(64, 4096));
    sub->add_option("--max-prec", cfg.max_precision, "precision ceiling in bits")->check(CLI::Range(64, 4096));
    sub->add_option("--format", format, "text, json, csv or markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}));
    sub->add_option("--out", cfg.out, "write output to this file");
  };

  CLI::App* tables = app.add_subcommand("tables", "print the tables of c_n, d_n, G_n and BH_n");
  common(tables);
  CLI::App* verify = app.add_subcommand("verify", "run the full pipeline for every prime up to lmax");
  common(verify);
  verify->add_option("--lmax", cfg.lmax, "largest prime")->check(CLI::Range(7ul, 1000000ul));
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--norm-bound", cfg.norm_bound, "norm bound for the local factor check")
      ->check(CLI::Range(4ul, 100000ul));
  CLI::App* gauss = app.add_subcommand("gauss", "elliptic Gauss sum and alpha for one prime");
  common(gauss);
  gauss->add_option("--ell", cfg.ell, "prime 4 or 7 mod 9")->required();
  CLI::App* curve = app.add_subcommand("curve", "point counts and local data for one prime");
  common(curve);
  curve->add_option("--ell", cfg.ell, "prime 4 or 7 mod 9")->required();
  curve->add_option("--prime", cfg.prime, "residue characteristic to count points at");
  CLI::App* sha = app.add_subcommand("sha", "BSD-assembled Sha prediction for one prime");
  common(sha);
  sha->add_option("--ell", cfg.ell, "prime 4 or 7 mod 9")->required();

  if (const char* env = std::getenv(kPrecisionEnv)) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 64 || v > 4096) {
      err << kPrecisionEnv << " must be an integer in [64, 4096]\n";
      return kExitUsage;
    }
    cfg.precision_bits = v;
  }

  try {
    app.parse(argc, argv);
    if (!format.empty()) cfg.format = report::parse_format(format);
    else if (verify->parsed()) cfg.format = report::Format::Json;
    if (cfg.max_precision < cfg.precision_bits) cfg.max_precision = cfg.precision_bits;
    cfg.validate();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot open " << cfg.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;
  try {
    if (tables->parsed()) return cmd_tables(cfg, sink);
    if (verify->parsed()) return cmd_verify(cfg, sink);
    if (gauss->parsed()) return cmd_gauss(cfg, sink);
    if (curve->parsed()) return cmd_curve(cfg, sink);
    return cmd_sha(cfg, sink);
  } catch (const Error& e) {
    err << e.what() << '\n';
    bool usage = e.kind() == ErrorKind::NotSplit || e.kind() == ErrorKind::UnsupportedResidueClass ||
                 e.kind() == ErrorKind::InvalidArgument;
    return usage ? kExitUsage : kExitFailure;
  }
}

}  // namespace ellgauss
