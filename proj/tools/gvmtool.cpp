// Command-line front end: parabolic Hasse graphs, BGG graphs, extremal
// vectors, complex checks and the dual Dirac-operator verification.
//
// Exit codes: 0 success, 1 property violation found, 2 usage error,
// 3 resource guard exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>

#include "gvm/clifford.hpp"
#include "gvm/graph_io.hpp"
#include "gvm/verma.hpp"

using namespace gvm;
using nlohmann::json;

namespace {

struct AlgebraOpts {
  std::string series = "D";
  int rank = 4;
  int cross = 1;

  AlgebraSpec spec() const {
    if (series != "B" && series != "D") throw CLI::ValidationError("--algebra must be B or D");
    return AlgebraSpec{series == "B" ? Series::B : Series::D, rank};
  }
};

void add_algebra_opts(CLI::App* cmd, AlgebraOpts& o) {
  cmd->add_option("--algebra", o.series, "series, B or D")->required();
  cmd->add_option("--rank", o.rank, "rank of the algebra")->required();
  cmd->add_option("--cross", o.cross, "crossed simple-root index k (Sigma = {alpha_k})")
      ->required();
}

void write_out(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_file);
    if (!os) throw std::runtime_error("cannot open " + out_file);
    os << text;
  }
}

void emit_graph(const LabeledGraph& g, const std::optional<Weight>& lambda,
                const std::string& format, const std::string& out_file) {
  std::string text;
  if (format == "json")
    text = emit_json(g, lambda);
  else if (format == "dot")
    text = emit_dot(g);
  else if (format == "text")
    text = emit_text(g);
  else
    throw CLI::ValidationError("--format must be dot, json or text");
  write_out(text, out_file);
}

json vector_json(const VermaContext& ctx, const VermaVector& v) {
  json terms = json::array();
  for (const auto& [t, c] : v.terms()) {
    json jy = json::array(), jY = json::array();
    for (int r : t.y) {
      const auto& g = ctx.gminus_gen(r);
      jy.push_back({g.i, g.j});
    }
    for (int r : t.Y) {
      const auto& g = ctx.gzero_lower_gen(r);
      jY.push_back({g.i, g.j});
    }
    terms.push_back({{"coeff", rat_str(c)}, {"y", jy}, {"Y", jY}});
  }
  return terms;
}

int run_hasse(const AlgebraOpts& ao, bool regular, const std::string& lambda_text,
              const std::string& format, const std::string& out_file) {
  Algebra alg(ao.spec());
  Parabolic par(alg, ao.cross);
  if (regular) {
    emit_graph(par.regular_hasse_graph(), std::nullopt, format, out_file);
  } else {
    Weight lam = parse_weight_literal(lambda_text, ao.rank, ao.cross);
    emit_graph(par.singular_hasse_graph(lam), lam, format, out_file);
  }
  return 0;
}

int run_bgg(const AlgebraOpts& ao, const std::string& lambda_text, bool confirm,
            const std::string& format, const std::string& out_file) {
  Algebra alg(ao.spec());
  Parabolic par(alg, ao.cross);
  Weight lam = parse_weight_literal(lambda_text, ao.rank, ao.cross);
  Parabolic::NonstandardOracle oracle;
  if (confirm) {
    oracle = [&par](const Weight& a, const Weight& b) {
      VermaContext ctx(par, a);
      return ctx.extremal_vectors(b).dim() > 0;
    };
  }
  emit_graph(par.bgg_graph(lam, oracle), lam, format, out_file);
  return 0;
}

int run_extremal(const AlgebraOpts& ao, const std::string& lambda_text,
                 const std::string& mu_text, const std::string& format,
                 const std::string& out_file) {
  Algebra alg(ao.spec());
  Parabolic par(alg, ao.cross);
  Weight lam = parse_weight_literal(lambda_text, ao.rank, ao.cross);
  Weight mu = parse_weight_literal(mu_text, ao.rank, ao.cross);
  VermaContext ctx(par, lam);
  ExtremalSolution sol = ctx.extremal_vectors(mu);
  if (format == "json") {
    json doc;
    doc["algebra"] = ao.series;
    doc["rank"] = ao.rank;
    doc["sigma"] = ao.cross;
    doc["lambda"] = weight_literal(lam, ao.cross);
    doc["mu"] = weight_literal(mu, ao.cross);
    doc["dim"] = sol.dim();
    doc["basis"] = json::array();
    for (const auto& v : sol.basis) doc["basis"].push_back(vector_json(ctx, v));
    write_out(doc.dump(2) + "\n", out_file);
  } else {
    std::string text = "dim " + std::to_string(sol.dim()) + "\n";
    for (const auto& v : sol.basis) text += ctx.to_text(v) + "\n";
    write_out(text, out_file);
  }
  return 0;
}

int run_complex(const AlgebraOpts& ao, const std::vector<std::string>& chain_texts,
                const std::string& out_file) {
  Algebra alg(ao.spec());
  Parabolic par(alg, ao.cross);
  std::vector<Weight> chain;
  for (const auto& t : chain_texts) chain.push_back(parse_weight_literal(t, ao.rank, ao.cross));
  if (chain.size() < 2) throw CLI::ValidationError("--chain needs at least two weights");

  std::string text;
  std::vector<std::unique_ptr<VermaContext>> ctxs;
  ctxs.reserve(chain.size());
  for (const auto& w : chain) ctxs.push_back(std::make_unique<VermaContext>(par, w));
  std::vector<ExtremalSolution> sols;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    sols.push_back(ctxs[i]->extremal_vectors(chain[i + 1]));
    text += "hom " + weight_literal(chain[i + 1], ao.cross) + " -> " +
            weight_literal(chain[i], ao.cross) + ": dim " + std::to_string(sols.back().dim()) +
            "\n";
  }
  bool violation = false;
  if (sols.size() < 2) text += "chain of length 2: nothing to compose\n";
  for (std::size_t i = 0; i + 1 < sols.size(); ++i) {
    if (sols[i].dim() != 1 || sols[i + 1].dim() != 1) {
      text += "composition " + std::to_string(i) + ": skipped (missing homomorphism)\n";
      violation = true;
      continue;
    }
    bool zero = compose_is_zero(*ctxs[i], sols[i].basis[0], sols[i + 1].basis[0]);
    text += "composition M_p(" + weight_literal(chain[i + 2], ao.cross) + ") -> M_p(" +
            weight_literal(chain[i], ao.cross) + "): " + (zero ? "zero" : "NONZERO") + "\n";
    if (!zero) violation = true;
  }
  write_out(text, out_file);
  return violation ? 1 : 0;
}

int run_dirac(int n, int degree, const std::string& mode, int trials, bool mutate, bool alt,
              const std::string& out_file) {
  SequenceOptions opt;
  opt.mutate_stage2 = mutate;
  opt.alt_signs = alt;
  bool exhaustive = mode == "exhaustive";
  if (!exhaustive && mode != "random") throw CLI::ValidationError("--mode exhaustive|random");
  ComplexReport rep = verify_complex(n, degree, exhaustive, trials, opt);
  json doc;
  doc["n"] = n;
  doc["degree"] = degree;
  doc["mode"] = mode;
  doc["inputs_checked"] = rep.inputs_checked;
  doc["nonzero_inputs"] = rep.nonzero_inputs;
  doc["composite_failures"] = rep.failures;
  doc["laplacian_failures"] = rep.laplacian_failures;
  doc["ok"] = rep.ok();
  if (!rep.failure_notes.empty()) doc["failures"] = rep.failure_notes;
  write_out(doc.dump(2) + "\n", out_file);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact BGG graphs, extremal vectors and Dirac complexes for B/D parabolics"};
  app.require_subcommand(1);

  AlgebraOpts hasse_a, bgg_a, ext_a, cx_a;
  bool regular = false, singular = false;
  std::string lambda_text, mu_text, format = "text", out_file;

  auto* hasse = app.add_subcommand("hasse", "regular or singular parabolic Hasse graph");
  add_algebra_opts(hasse, hasse_a);
  hasse->add_flag("--regular", regular, "graph on W^p (vertices w delta)");
  hasse->add_flag("--singular", singular, "graph on the affine orbit of --lambda");
  hasse->add_option("--lambda", lambda_text, "weight literal a_1,..,a_k|b_1,..,b_n");
  hasse->add_option("--format", format, "dot|json|text");
  hasse->add_option("--out", out_file, "write to file instead of stdout");

  bool confirm = false;
  std::string bgg_lambda, bgg_format = "text", bgg_out;
  auto* bgg = app.add_subcommand("bgg", "BGG graph on the affine orbit of lambda");
  add_algebra_opts(bgg, bgg_a);
  bgg->add_option("--lambda", bgg_lambda)->required();
  bgg->add_flag("--confirm-extremal", confirm,
                "decide candidate nonstandard arrows with the extremal-vector solver");
  bgg->add_option("--format", bgg_format, "dot|json|text");
  bgg->add_option("--out", bgg_out);

  std::string ext_lambda, ext_mu, ext_format = "text", ext_out;
  auto* ext = app.add_subcommand("extremal", "solve the extremal vectors for M_p(mu) -> M_p(lambda)");
  add_algebra_opts(ext, ext_a);
  ext->add_option("--lambda", ext_lambda)->required();
  ext->add_option("--mu", ext_mu)->required();
  ext->add_option("--format", ext_format, "text|json");
  ext->add_option("--out", ext_out);

  std::vector<std::string> chain;
  std::string cx_out;
  auto* cx = app.add_subcommand("complex", "verify that compositions along a chain vanish");
  add_algebra_opts(cx, cx_a);
  cx->add_option("--chain", chain, "weights along the chain, top first")->expected(2, 8);
  cx->add_option("--out", cx_out);

  int dn = 4, ddeg = 4, dtrials = 200;
  std::string dmode = "exhaustive", d_out;
  bool mutate = false, alt = false;
  auto* dr = app.add_subcommand("dirac", "verify the two-variable Dirac operator complex");
  dr->add_option("--n", dn, "dimension of each vector variable")->required();
  dr->add_option("--degree", ddeg, "maximal monomial degree");
  dr->add_option("--mode", dmode, "exhaustive|random");
  dr->add_option("--trials", dtrials, "sample count in random mode");
  dr->add_flag("--mutate-stage2", mutate, "negative control: flip one stage-2 sign");
  dr->add_flag("--alt-signs", alt, "use the alternative dual identification");
  dr->add_option("--out", d_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hasse->parsed()) {
      if (regular == singular) throw CLI::ValidationError("pass exactly one of --regular/--singular");
      if (!regular && lambda_text.empty()) throw CLI::ValidationError("--singular needs --lambda");
      return run_hasse(hasse_a, regular, lambda_text, format, out_file);
    }
    if (bgg->parsed()) return run_bgg(bgg_a, bgg_lambda, confirm, bgg_format, bgg_out);
    if (ext->parsed()) return run_extremal(ext_a, ext_lambda, ext_mu, ext_format, ext_out);
    if (cx->parsed()) return run_complex(cx_a, chain, cx_out);
    if (dr->parsed()) return run_dirac(dn, ddeg, dmode, dtrials, mutate, alt, d_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
