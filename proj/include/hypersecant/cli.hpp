#pragma once

// Command-line front end: `hypersecant <command> [flags]`. Exit status 0 on
// success, 1 when a requested verification fails, 2 on invalid input.

#include "hypersecant/circular_order.hpp"
#include "hypersecant/groebner.hpp"
#include "hypersecant/hypersimplex.hpp"
#include "hypersecant/master.hpp"
#include "hypersecant/noncrossing.hpp"
#include "hypersecant/printed_examples.hpp"
#include "hypersecant/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hypersecant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest n each workload accepts without --allow-large.
struct DeskScale {
  int max_n = 16;
  int sweep_max_n = 8;
  int toric_buchberger_max_n = 7;
  int buchberger_max_n = 6;
  int brute_force_max_n = 11;
};

enum class Format { text, json, algebra_script };

struct RunConfig {
  std::string command;
  std::string mode;  // verify sub-mode
  int n = 0;
  std::string order_spec = "inner=grevlex";
  Format format = Format::text;
  unsigned threads = 1;
  bool allow_large = false;
  std::string output;  // empty = standard output
  int max_len = 0;
  int k = 0;
  std::vector<int> i;
  std::vector<int> j;
  std::string kind;
  std::string method = "families";
  bool all = false;
  bool buchberger = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {}

  int run(std::ostream& out) {
    const std::string& c = cfg_.command;
    if (c == "toric-gb") return toric_gb_cmd(out);
    if (c == "initial-ideal") return ideal_cmd(out, "initial ideal of I_" + std::to_string(need_n(3)), initial_edge_ideal(cfg_.n));
    if (c == "initial-secant") return initial_secant_cmd(out);
    if (c == "initial-symbolic")
      return ideal_cmd(out, "initial symbolic square of I_" + std::to_string(need_n(3)), symbolic_initial_ideal(cfg_.n));
    if (c == "odd-cycles") return odd_cycles_cmd(out);
    if (c == "admissible") return admissible_cmd(out);
    if (c == "master-poly") return master_cmd(out);
    if (c == "secant-gb") return gb_cmd(out, secant_candidates(need_n(4, DeskScale{}.sweep_max_n)), "secant ideal");
    if (c == "symbolic-gb")
      return gb_cmd(out, symbolic_square_candidates(need_n(4, DeskScale{}.sweep_max_n)), "symbolic square");
    if (c == "verify") return verify_cmd(out);
    if (c == "reproduce") return reproduce_cmd(out);
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  int need_n(int min_n, std::optional<int> desk = std::nullopt) const {
    if (cfg_.n < min_n) throw UsageError(cfg_.command + ": --n must be >= " + std::to_string(min_n));
    if (cfg_.n > DeskScale{}.max_n) throw UsageError(cfg_.command + ": --n must be <= " + std::to_string(DeskScale{}.max_n));
    if (desk && cfg_.n > *desk) {
      if (!cfg_.allow_large)
        throw UsageError(cfg_.command + ": n=" + std::to_string(cfg_.n) + " exceeds the desk-scale bound " +
                         std::to_string(*desk) + " (pass --allow-large to override)");
      err_ << "warning: n=" << cfg_.n << " exceeds the desk-scale bound " << *desk << " for " << cfg_.command
           << "; this may take a long time\n";
    }
    return cfg_.n;
  }

  CircularTermOrder order(int n) const { return CircularTermOrder(n, parse_inner_order(cfg_.order_spec)); }

  json header(const CircularTermOrder& o) const {
    return {{"command", cfg_.command}, {"n", o.n()}, {"order", order_json(o)}};
  }

  static void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

  int toric_gb_cmd(std::ostream& out) {
    const int n = need_n(3);
    const auto o = order(n);
    const auto gens = toric_gb(n);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["generators"] = json::array();
      for (const auto& g : gens) j["generators"].push_back({{"lead", monomial_json(g.lead)}, {"trail", monomial_json(g.trail)}});
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      std::vector<std::string> lines;
      for (const auto& g : gens) lines.push_back(script_polynomial(g.polynomial(), o));
      out << algebra_script(n, lines, "toric ideal of the second hypersimplex, n=" + std::to_string(n));
    } else {
      for (const auto& g : gens) out << to_string(g.polynomial(), o) << "\n";
    }
    return kExitOk;
  }

  int ideal_cmd(std::ostream& out, const std::string& title, const MonomialIdeal& ideal) {
    const auto o = order(cfg_.n);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["generators"] = json::array();
      for (const auto& m : ideal.generators()) j["generators"].push_back(monomial_json(m));
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      std::vector<std::string> lines;
      for (const auto& m : ideal.generators()) lines.push_back(script_monomial(m));
      out << algebra_script(cfg_.n, lines, title);
    } else {
      for (const auto& m : ideal.generators()) out << m.to_string() << "\n";
    }
    return kExitOk;
  }

  int initial_secant_cmd(std::ostream& out) {
    if (cfg_.method == "brute-force") {
      const int n = need_n(3, DeskScale{}.brute_force_max_n);
      return ideal_cmd(out, "secant of the noncrossing edge ideal (brute force), n=" + std::to_string(n),
                       secant_of_edge_ideal(NoncrossingGraph(n), max_odd_up_to(n), cfg_.threads));
    }
    if (cfg_.method != "families") throw UsageError("--method must be families or brute-force");
    const int n = need_n(3);
    return ideal_cmd(out, "secant of the initial ideal of I_" + std::to_string(n), secant_initial_ideal(n));
  }

  int odd_cycles_cmd(std::ostream& out) {
    const int n = need_n(3, DeskScale{}.brute_force_max_n);
    const int max_len = cfg_.max_len > 0 ? cfg_.max_len : max_odd_up_to(n);
    if (max_len < 3 || max_len % 2 == 0) throw UsageError("--max-len must be odd and >= 3");
    const auto cycles = induced_odd_cycles(NoncrossingGraph(n), max_len, cfg_.threads);
    const auto o = order(n);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["max_len"] = max_len;
      j["cycles"] = json::array();
      for (const auto& vs : cycles)
        j["cycles"].push_back({{"vertices", vertex_set_json(vs)}, {"monomial", monomial_json(vertex_set_monomial(vs))}});
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      std::vector<std::string> lines;
      for (const auto& vs : cycles) lines.push_back(script_monomial(vertex_set_monomial(vs)));
      out << algebra_script(n, lines, "induced odd cycles of the noncrossing graph, n=" + std::to_string(n));
    } else {
      for (const auto& vs : cycles) {
        std::string line;
        for (const auto& e : vs) line += (line.empty() ? "" : " ") + std::string("[") + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
        out << line << "\n";
      }
    }
    return kExitOk;
  }

  std::vector<AdmissibleSequence> sequences(int n) const {
    if (cfg_.k > 0) {
      if (2 * cfg_.k + 1 > n) return {};
      return admissible_sequences(n, cfg_.k);
    }
    return all_admissible_sequences(n);
  }

  int admissible_cmd(std::ostream& out) {
    const int n = need_n(3);
    const auto o = order(n);
    const auto seqs = sequences(n);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["sequences"] = json::array();
      for (const auto& s : seqs)
        j["sequences"].push_back({{"k", s.k()}, {"i", s.i()}, {"j", s.j()}, {"cycle_monomial", monomial_json(cycle_monomial(s))}});
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      std::vector<std::string> lines;
      for (const auto& s : seqs) lines.push_back(script_monomial(cycle_monomial(s)));
      out << algebra_script(n, lines, "cycle monomials of admissible sequences, n=" + std::to_string(n));
    } else {
      for (const auto& s : seqs) out << s.to_string() << " " << cycle_monomial(s).to_string() << "\n";
    }
    return kExitOk;
  }

  AdmissibleSequence sequence_from_flags() const {
    if (cfg_.i.empty() || cfg_.j.empty()) throw UsageError(cfg_.command + ": --i and --j are required");
    return AdmissibleSequence(cfg_.i, cfg_.j);
  }

  int master_cmd(std::ostream& out) {
    const AdmissibleSequence s = sequence_from_flags();
    const int n = cfg_.n > 0 ? cfg_.n : std::max(s.max_index(), 2);
    if (s.max_index() > n) throw UsageError("master-poly: indices exceed --n");
    if (n > DeskScale{}.max_n) throw UsageError("master-poly: --n must be <= " + std::to_string(DeskScale{}.max_n));
    const auto o = order(n);
    const Polynomial f = master_polynomial(s);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["sequence"] = {{"k", s.k()}, {"i", s.i()}, {"j", s.j()}};
      j["polynomial"] = polynomial_json(f, o);
      j["term_count"] = f.term_count();
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      out << algebra_script(n, {script_polynomial(f, o)}, "master polynomial " + s.to_string());
    } else {
      out << to_string(f, o) << "\n";
    }
    return kExitOk;
  }

  int gb_cmd(std::ostream& out, const std::vector<Candidate>& cands, const std::string& title) {
    const auto o = order(cfg_.n);
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["generators"] = json::array();
      for (const auto& c : cands) j["generators"].push_back({{"origin", c.origin}, {"polynomial", polynomial_json(c.poly, o)}});
      emit_json(out, j);
    } else if (cfg_.format == Format::algebra_script) {
      std::vector<std::string> lines;
      for (const auto& c : cands) lines.push_back(script_polynomial(c.poly, o));
      out << algebra_script(cfg_.n, lines, "Groebner basis candidates for the " + title + ", n=" + std::to_string(cfg_.n));
    } else {
      for (const auto& c : cands) out << to_string(c.poly, o) << "\n";
    }
    return kExitOk;
  }

  IdealKind kind() const {
    if (cfg_.kind == "secant") return IdealKind::secant;
    if (cfg_.kind == "symbolic" || cfg_.kind == "symbolic-square") return IdealKind::symbolic_square;
    if (cfg_.kind == "toric") return IdealKind::toric;
    throw UsageError("--kind must be toric, secant or symbolic");
  }

  int emit_certificate(std::ostream& out, const GroebnerCertificate& cert) {
    if (cfg_.format == Format::json) {
      json j = certificate_json(cert);
      j["command"] = "verify " + cfg_.mode;
      emit_json(out, j);
    } else {
      out << certificate_text(cert);
    }
    return cert.passed() ? kExitOk : kExitFailed;
  }

  int verify_cmd(std::ostream& out) {
    const std::string& mode = cfg_.mode;
    if (mode == "buchberger") {
      const IdealKind kd = kind();
      const int bound = kd == IdealKind::toric ? DeskScale{}.toric_buchberger_max_n : DeskScale{}.buchberger_max_n;
      const int n = need_n(kd == IdealKind::toric ? 3 : 4, bound);
      const auto o = order(n);
      std::vector<Polynomial> basis = kd == IdealKind::toric ? toric_gb_polynomials(n)
                                      : kd == IdealKind::secant ? secant_gb(n)
                                                                : symbolic_square_gb(n);
      GroebnerCertificate cert = buchberger_verify(basis, o, cfg_.threads);
      cert.kind = kd;
      return emit_certificate(out, cert);
    }
    if (mode == "delightful") {
      if (cfg_.kind.empty()) throw UsageError("verify delightful: --kind is required");
      const IdealKind kd = kind();
      if (kd == IdealKind::toric) throw UsageError("verify delightful: --kind must be secant or symbolic");
      const int n = need_n(4, cfg_.buchberger ? DeskScale{}.buchberger_max_n : DeskScale{}.sweep_max_n);
      return emit_certificate(out, delightful_check(n, kd, order(n), cfg_.buchberger, cfg_.threads));
    }
    if (mode == "membership" || mode == "prolongation" || mode == "leading-term") return sequence_sweep(out);
    throw UsageError("verify: unknown mode '" + mode + "'");
  }

  int sequence_sweep(std::ostream& out) {
    const std::string& mode = cfg_.mode;
    std::vector<AdmissibleSequence> seqs;
    int n = 0;
    if (cfg_.all) {
      n = need_n(5, DeskScale{}.sweep_max_n);
      seqs = sequences(n);
    } else {
      seqs.push_back(sequence_from_flags());
      n = cfg_.n > 0 ? cfg_.n : seqs.front().max_index();
      if (seqs.front().max_index() > n) throw UsageError("verify: indices exceed --n");
      if (n > DeskScale{}.max_n) throw UsageError("verify: --n must be <= " + std::to_string(DeskScale{}.max_n));
    }
    const auto o = order(n);
    std::vector<char> ok(seqs.size(), 0);
    parallel_for(seqs.size(), cfg_.threads, [&](std::size_t x) {
      const auto& s = seqs[x];
      if (mode == "membership")
        ok[x] = verify_membership(n, s);
      else if (mode == "prolongation")
        ok[x] = verify_prolongation(n, master_polynomial(s), s.k());
      else
        ok[x] = verify_leading_term(n, s, o);
    });
    const bool all_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    if (cfg_.format == Format::json) {
      json j = header(o);
      j["command"] = "verify " + mode;
      j["results"] = json::array();
      for (std::size_t x = 0; x < seqs.size(); ++x)
        j["results"].push_back({{"i", seqs[x].i()}, {"j", seqs[x].j()}, {"pass", ok[x] != 0}});
      j["pass"] = all_ok;
      emit_json(out, j);
    } else {
      for (std::size_t x = 0; x < seqs.size(); ++x) out << (ok[x] ? "PASS " : "FAIL ") << mode << " " << seqs[x].to_string() << "\n";
      out << (all_ok ? "RESULT PASS" : "RESULT FAIL") << " (" << seqs.size() << " sequence(s))\n";
    }
    return all_ok ? kExitOk : kExitFailed;
  }

  int reproduce_cmd(std::ostream& out) {
    const auto results = reproduce_printed_examples();
    bool all_ok = true;
    if (cfg_.format == Format::json) {
      json j = {{"command", "reproduce"}, {"examples", json::array()}};
      for (const auto& r : results) {
        j["examples"].push_back({{"name", r.name}, {"match", r.match}, {"differences", r.differences}});
        all_ok = all_ok && r.match;
      }
      j["pass"] = all_ok;
      emit_json(out, j);
    } else {
      for (const auto& r : results) {
        out << (r.match ? "MATCH " : "MISMATCH ") << r.name << "\n";
        for (const auto& d : r.differences) out << "  " << d << "\n";
        all_ok = all_ok && r.match;
      }
    }
    return all_ok ? kExitOk : kExitFailed;
  }

  const RunConfig& cfg_;
  std::ostream& err_;
};

}  // namespace detail

/// Executes a parsed configuration, writing the report to `out` (or to
/// cfg.output when set).
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    detail::Runner runner(cfg, err);
    if (cfg.output.empty()) return runner.run(out);
    std::ostringstream buffer;
    const int status = runner.run(buffer);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + cfg.output);
    file << buffer.str();
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

/// Parses argv-style arguments (without the program name) and executes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  CLI::App app{"Groebner bases of the second hypersimplex, its secant ideal and symbolic square", "hypersecant"};
  app.require_subcommand(1);

  auto shared = [&](CLI::App* sub, bool with_n = true) {
    if (with_n) sub->add_option("--n", cfg.n, "number of polygon vertices");
    sub->add_option("--order", cfg.order_spec, "inner order: inner=grevlex|lex");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "algebra-script"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--allow-large", cfg.allow_large, "exceed desk-scale bounds");
    sub->add_option("--output", cfg.output, "write the report to a file");
  };
  auto index_list = [&](CLI::App* sub) {
    sub->add_option("--i", cfg.i, "i sequence, comma separated")->delimiter(',');
    sub->add_option("--j", cfg.j, "j sequence, comma separated")->delimiter(',');
  };

  shared(app.add_subcommand("toric-gb", "quadratic Groebner basis of I_n"));
  shared(app.add_subcommand("initial-ideal", "minimal generators of in(I_n)"));
  auto* isec = app.add_subcommand("initial-secant", "minimal generators of in(I_n)^{2}");
  shared(isec);
  isec->add_option("--method", cfg.method, "families|brute-force")->check(CLI::IsMember({"families", "brute-force"}));
  shared(app.add_subcommand("initial-symbolic", "minimal generators of in(I_n)^(2)"));
  auto* cyc = app.add_subcommand("odd-cycles", "induced odd cycles of the noncrossing graph");
  shared(cyc);
  cyc->add_option("--max-len", cfg.max_len, "longest cycle to enumerate (odd)");
  auto* adm = app.add_subcommand("admissible", "admissible sequences and their cycle monomials");
  shared(adm);
  adm->add_option("--k", cfg.k, "restrict to length 2k+1");
  auto* mp = app.add_subcommand("master-poly", "master polynomial of an admissible sequence");
  shared(mp);
  index_list(mp);
  shared(app.add_subcommand("secant-gb", "Groebner basis of the secant ideal"));
  shared(app.add_subcommand("symbolic-gb", "Groebner basis of the symbolic square"));
  auto* ver = app.add_subcommand("verify", "run a verification");
  shared(ver);
  index_list(ver);
  ver->add_option("mode", cfg.mode, "membership|prolongation|leading-term|buchberger|delightful")
      ->required()
      ->check(CLI::IsMember({"membership", "prolongation", "leading-term", "buchberger", "delightful"}));
  ver->add_option("--kind", cfg.kind, "toric|secant|symbolic");
  ver->add_flag("--all", cfg.all, "every admissible sequence for n");
  ver->add_flag("--buchberger", cfg.buchberger, "include the S-pair criterion");
  ver->add_option("--k", cfg.k, "restrict --all to length 2k+1");
  shared(app.add_subcommand("reproduce", "regenerate the printed master polynomial examples"), false);

  std::vector<std::string> argv_store{"hypersecant"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.format = format == "json" ? Format::json : format == "algebra-script" ? Format::algebra_script : Format::text;
  try {
    parse_inner_order(cfg.order_spec);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace hypersecant::cli
