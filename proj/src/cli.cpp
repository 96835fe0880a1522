#include "ghzcert/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "ghzcert/certificate.hpp"
#include "ghzcert/error.hpp"
#include "ghzcert/gpor.hpp"
#include "ghzcert/json_io.hpp"
#include "ghzcert/protocol.hpp"

namespace ghzcert {

namespace {

template <typename Seq>
std::string join(const Seq& items, const std::string& sep = ", ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : items) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::string brackets(const IntVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return "[" + join(parts) + "]";
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message,
                std::optional<std::size_t> index = std::nullopt) {
  Json j{{"code", code}, {"message", message}};
  if (index) j["index"] = *index;
  err << j.dump() << "\n";
}

struct Options {
  std::string input;
  int a = 0;
  int b = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  bool deep = false;
  bool json = false;
  std::int64_t bound = 1000;
  bool no_search = false;
};

int cmd_connectivity(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const Cut cut = minimum_cut(h);
  const RateBound rate = ghz_rate_bound(h);
  if (opt.json) {
    out << Json{{"lambda", cut.crossing.size()},
                {"cut", Json{{"side", cut.side}, {"crossing", cut.crossing}}},
                {"min_cut_rank", integer_to_json(rate.min_cut_rank)},
                {"log2_min_cut_rank", rate.log2_rank}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "lambda=" << cut.crossing.size() << "\n";
  out << "min cut: S={" << join(cut.side) << "}, crossing edges [" << join(cut.crossing) << "]\n";
  out << "min_cut_rank=" << rate.min_cut_rank.get_str() << " (log2 = " << fixed(rate.log2_rank)
      << ")\n";
  return kExitOk;
}

int cmd_rate(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const RateBound rate = ghz_rate_bound(h);
  if (opt.json) {
    out << Json{{"uniform_level_two", rate.uniform_level_two},
                {"lambda", rate.lambda},
                {"min_cut_rank", integer_to_json(rate.min_cut_rank)},
                {"ghz_per_copy", rate.uniform_level_two ? static_cast<double>(rate.lambda)
                                                        : rate.log2_rank},
                {"cut", rate.witness.side}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  if (rate.uniform_level_two) {
    out << "lambda=" << rate.lambda << ", rate: 1/" << rate.lambda << " copies per GHZ ("
        << rate.lambda << " GHZ per copy)\n";
  } else {
    out << "min_cut_rank=" << rate.min_cut_rank.get_str() << ", rate: " << fixed(rate.log2_rank)
        << " GHZ per copy (cut S={" << join(rate.witness.side) << "})\n";
  }
  return kExitOk;
}

int cmd_epr(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const EprRate rate = epr_rate(h, opt.a, opt.b);
  if (opt.json) {
    Json paths = Json::array();
    for (const auto& p : rate.paths) paths.push_back(Json{{"edges", p.edges}, {"vertices", p.vertices}});
    out << Json{{"t", rate.t}, {"rate", 1.0 / rate.t}, {"paths", paths}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "t=" << rate.t << ", rate: 1/" << rate.t << " copies per EPR\n";
  for (std::size_t i = 0; i < rate.paths.size(); ++i) {
    out << "path " << i << ": vertices " << join(rate.paths[i].vertices, " -> ") << " via edges ["
        << join(rate.paths[i].edges) << "]\n";
  }
  return kExitOk;
}

int cmd_gpor(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  const int lambda = edge_connectivity(h);
  const std::size_t d = h.edge_count() - static_cast<std::size_t>(lambda);
  OrthRep rep{line_graph(h), d, std::vector<IntVector>(h.edge_count())};
  if (d > 0) rep = find_gpor(rep.graph, d, opt.seed, GporOptions{opt.bound, 32});
  const OrthRepReport report = verify_orthrep(rep);
  if (opt.json) {
    Json vectors = Json::array();
    for (const auto& v : rep.vectors) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(integer_to_json(x));
      vectors.push_back(row);
    }
    out << Json{{"lambda", lambda},
                {"d", d},
                {"seed", opt.seed},
                {"vectors", vectors},
                {"report",
                 Json{{"ok", report.ok()},
                      {"orthogonality_violations", report.orthogonality_violations},
                      {"dependent_subsets", report.dependent_subsets},
                      {"zero_vectors", report.zero_vectors}}}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "lambda=" << lambda << ", d=|E|-lambda=" << d << ", seed=" << opt.seed << "\n";
  for (std::size_t e = 0; e < rep.vectors.size(); ++e) {
    out << "edge " << e << ": " << brackets(rep.vectors[e]) << "\n";
  }
  if (report.ok()) {
    out << "verification: ok (orthogonal, general position, nonzero)\n";
  } else {
    for (const auto& [u, v] : report.orthogonality_violations) {
      out << "violation: edges " << u << " and " << v << " are disjoint but not orthogonal\n";
    }
    for (const auto& s : report.dependent_subsets) out << "violation: dependent {" << join(s) << "}\n";
    for (auto z : report.zero_vectors) out << "violation: zero vector at edge " << z << "\n";
  }
  return kExitOk;
}

int cmd_certify(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(opt.input);
  SynthesisOptions sopt;
  sopt.gpor.bound = opt.bound;
  sopt.search = !opt.no_search;
  const Certificate cert = synthesize_certificate(h, opt.n, opt.seed, sopt);
  const std::string text = dump_canonical(certificate_to_json(cert));
  if (opt.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_text_file(opt.out_path, text);
  if (opt.json) {
    out << Json{{"path", opt.out_path},
                {"lambda", cert.lambda},
                {"d", cert.d},
                {"M", cert.count},
                {"achieved_rate", cert.achieved_rate()},
                {"bound_rate", cert.bound_rate}}
               .dump(2)
        << "\n";
  } else {
    out << "wrote " << opt.out_path << ": lambda=" << cert.lambda << " d=" << cert.d
        << " n=" << cert.n << " g=" << brackets(cert.g) << " M=" << cert.count
        << " rate=" << fixed(cert.achieved_rate()) << " GHZ per copy (bound " << cert.bound_rate
        << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Certificate cert = certificate_from_json(read_json_file(opt.input));
  VerifyOptions vopt;
  vopt.deep = opt.deep;
  const VerificationReport report = verify_certificate(cert, vopt);
  if (opt.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      const char* tag = c.status == CheckStatus::Passed   ? "pass"
                        : c.status == CheckStatus::Failed ? "FAIL"
                                                          : "skip";
      out << std::left << std::setw(6) << tag << std::setw(16) << c.name << c.detail << "\n";
    }
    out << (report.ok() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ghzcert: GHZ distillation rates and degeneration certificates for hypergraph states"};
  app.name(args.empty() ? "ghzcert" : args.front());
  app.require_subcommand(1, 1);
  Options opt;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };

  auto* connectivity = app.add_subcommand("connectivity", "Edge connectivity, a minimum cut and the minimum cut rank");
  connectivity->add_option("file", opt.input, "Hypergraph JSON")->required();
  add_json(connectivity);

  auto* rate = app.add_subcommand("rate", "Optimal GHZ extraction rate");
  rate->add_option("file", opt.input, "Hypergraph JSON")->required();
  add_json(rate);

  auto* epr = app.add_subcommand("epr", "EPR rate between two vertices with path witnesses");
  epr->add_option("file", opt.input, "Hypergraph JSON")->required();
  epr->add_option("--a", opt.a, "First vertex (1-based)")->required();
  epr->add_option("--b", opt.b, "Second vertex (1-based)")->required();
  add_json(epr);

  auto* gpor = app.add_subcommand("gpor", "General-position orthogonal representation of the line graph");
  gpor->add_option("file", opt.input, "Hypergraph JSON")->required();
  gpor->add_option("--seed", opt.seed, "Random seed")->default_val(0);
  gpor->add_option("--bound", opt.bound, "Seed entries are drawn from [-bound, bound]")
      ->default_val(1000)
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  add_json(gpor);

  auto* certify = app.add_subcommand("certify", "Synthesize a degeneration certificate");
  certify->add_option("file", opt.input, "Hypergraph JSON")->required();
  certify->add_option("--n", opt.n, "Levels per GHZ factor (n >= 2)")->required()->check(CLI::Range(2, 1 << 20));
  certify->add_option("--seed", opt.seed, "Random seed")->default_val(0);
  certify->add_option("--out", opt.out_path, "Certificate output path (stdout if omitted)");
  certify->add_option("--bound", opt.bound, "Seed bound for the fallback representation search")
      ->default_val(1000)
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  certify->add_flag("--no-search", opt.no_search,
                    "Use the single seeded representation instead of the best of several");
  add_json(certify);

  auto* verify = app.add_subcommand("verify", "Verify a certificate");
  verify->add_option("file", opt.input, "Certificate JSON")->required();
  verify->add_flag("--deep", opt.deep, "Also replay the degeneration on the full tensor");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "Usage", e.what());
    return kExitUsage;
  }

  try {
    if (connectivity->parsed()) return cmd_connectivity(opt, out);
    if (rate->parsed()) return cmd_rate(opt, out);
    if (epr->parsed()) return cmd_epr(opt, out);
    if (gpor->parsed()) return cmd_gpor(opt, out);
    if (certify->parsed()) return cmd_certify(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const Error& e) {
    emit_error(err, std::string(code_name(e.code())), e.what(), e.index());
    return kExitInput;
  }
  emit_error(err, "Usage", "no subcommand");
  return kExitUsage;
}

}  // namespace ghzcert
