// qbohr command-line surface: catalog access, structural checks, Haar
// states, corepresentation operations, compactification, Hopf data, and
// Kac quotients over JSON files.
//
// Exit codes: 0 = success / verdict passed, 1 = mathematical failure
// (failed verdict, no Haar state, non-admissible input, ...), 2 = input
// error (malformed JSON, missing file, bad arguments).
#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "qbohr/bohr.hpp"
#include "qbohr/catalog.hpp"
#include "qbohr/json_io.hpp"
#include "qbohr/kacq.hpp"

using namespace qbohr;
using nlohmann::json;

namespace {

struct Options {
  double tol = 1e-9;
  std::string format = "text";
  unsigned seed = 0;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const json& j) { std::fputs(io::dump(j).c_str(), stdout); }

std::string fmt_complex(Complex z) {
  char buf[64];
  if (std::abs(z.imag()) < 1e-12)
    std::snprintf(buf, sizeof(buf), "%.9g", z.real());
  else
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
  return buf;
}

void print_verdict(const char* label, const Verdict& v) {
  if (v.pass)
    std::printf("%-24s pass (defect %.3e)\n", label, v.defect);
  else
    std::printf("%-24s FAIL (defect %.3e): %s\n", label, v.defect,
                v.witness.c_str());
}

std::string blocks_str(const std::vector<int>& blocks) {
  std::string s = "[";
  for (size_t i = 0; i < blocks.size(); ++i)
    s += (i ? "," : "") + std::to_string(blocks[i]);
  return s + "]";
}

QsgPtr load_qsg(const std::string& path, double tol) {
  return io::qsg_from_json(io::parse_file(path), tol);
}

RepMatrix load_rep(const std::string& path, const AlgebraPtr& A) {
  return io::rep_from_json(io::parse_file(path), A);
}

int cmd_catalog_list(const Options& opt) {
  if (json_mode(opt)) {
    json out = json::array();
    for (const auto& e : catalog())
      out.push_back({{"name", e.name},
                     {"description", e.description},
                     {"dim", e.qsg->dim()},
                     {"blocks", e.qsg->algebra()->blocks()},
                     {"compact_quantum_group", e.quantum_group}});
    emit(out);
  } else {
    for (const auto& e : catalog())
      std::printf("%-22s dim %2d  blocks %-12s %s  %s\n", e.name.c_str(),
                  e.qsg->dim(), blocks_str(e.qsg->algebra()->blocks()).c_str(),
                  e.quantum_group ? "cqg" : "   ", e.description.c_str());
  }
  return 0;
}

int cmd_catalog_emit(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw InputError("no catalog entry named '" + name + "'");
  emit(io::qsg_to_json(*e->qsg));
  return 0;
}

int cmd_check(const std::string& path, const Options& opt) {
  QsgPtr G;
  try {
    G = load_qsg(path, opt.tol);
  } catch (const InvalidComultiplication& e) {
    if (json_mode(opt))
      emit(json{{"valid", false}, {"reason", e.what()}});
    else
      std::printf("not a valid quantum semigroup: %s\n", e.what());
    return 1;
  }
  auto [left, right] = check_cancellation(*G);
  Verdict cqg = is_compact_quantum_group(*G);
  if (json_mode(opt)) {
    emit(json{{"valid", true},
              {"dim", G->dim()},
              {"blocks", G->algebra()->blocks()},
              {"left_cancellation", io::verdict_to_json(left)},
              {"right_cancellation", io::verdict_to_json(right)},
              {"compact_quantum_group", io::verdict_to_json(cqg)}});
  } else {
    std::printf("valid quantum semigroup: dim %d, blocks %s\n", G->dim(),
                blocks_str(G->algebra()->blocks()).c_str());
    print_verdict("left cancellation", left);
    print_verdict("right cancellation", right);
    print_verdict("compact quantum group", cqg);
  }
  return cqg.pass ? 0 : 1;
}

int cmd_haar(const std::string& path, const Options& opt) {
  QsgPtr G = load_qsg(path, opt.tol);
  StateFunctional h = haar_state(*G);
  if (json_mode(opt)) {
    emit(io::functional_to_json(h));
  } else {
    std::printf("haar weights:");
    for (int i = 0; i < G->dim(); ++i)
      std::printf(" %s", fmt_complex(h.covector(i)).c_str());
    std::printf("\npositive %s, tracial %s, normalized %s\n",
                h.positive ? "yes" : "no", h.tracial ? "yes" : "no",
                h.normalized ? "yes" : "no");
  }
  return 0;
}

int cmd_rep_check(const std::string& gpath, const std::string& tpath,
                  const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix T = load_rep(tpath, G->algebra());
  Verdict corep = is_corep(T, *G);
  Verdict bounded = is_bounded_representation(T, *G);
  Verdict admissible = is_admissible(T, *G);
  Verdict unitary = is_unitary_rep(T);
  if (json_mode(opt)) {
    emit(json{{"size", T.size},
              {"corep", io::verdict_to_json(corep)},
              {"bounded", io::verdict_to_json(bounded)},
              {"admissible", io::verdict_to_json(admissible)},
              {"unitary", io::verdict_to_json(unitary)}});
  } else {
    std::printf("%d x %d matrix over blocks %s\n", T.size, T.size,
                blocks_str(G->algebra()->blocks()).c_str());
    print_verdict("corepresentation", corep);
    print_verdict("bounded", bounded);
    print_verdict("admissible", admissible);
    print_verdict("unitary", unitary);
  }
  return corep.pass ? 0 : 1;
}

int cmd_rep_combine(const std::string& which, const std::string& gpath,
                    const std::string& t1path, const std::string& t2path,
                    const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix S = load_rep(t1path, G->algebra());
  RepMatrix T = load_rep(t2path, G->algebra());
  RepMatrix R = which == "dsum" ? direct_sum(S, T) : tensor_product(S, T);
  if (json_mode(opt))
    emit(io::rep_to_json(R));
  else
    std::printf("%s: %d x %d matrix, corep %s\n", which.c_str(), R.size, R.size,
                is_corep(R, *G).pass ? "pass" : "FAIL");
  return 0;
}

int cmd_rep_conj(const std::string& gpath, const std::string& tpath,
                 const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix T = load_rep(tpath, G->algebra());
  RepMatrix C = conjugate(T, *G);
  if (json_mode(opt))
    emit(io::rep_to_json(C));
  else
    std::printf("conjugate: %d x %d matrix, corep %s\n", C.size, C.size,
                is_corep(C, *G).pass ? "pass" : "FAIL");
  return 0;
}

int cmd_rep_admissible(const std::string& gpath, const std::string& tpath,
                       const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix T = load_rep(tpath, G->algebra());
  Verdict v = is_admissible(T, *G);
  if (json_mode(opt))
    emit(io::verdict_to_json(v));
  else
    print_verdict("admissible", v);
  return v.pass ? 0 : 1;
}

int cmd_rep_unitarize(const std::string& gpath, const std::string& tpath,
                      const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix T = load_rep(tpath, G->algebra());
  UnitarizeResult R = unitarize(T, *G);
  if (json_mode(opt)) {
    emit(json{{"rep", io::rep_to_json(R.rep)},
              {"m", io::matrix_to_json(R.m)},
              {"F", io::matrix_to_json(R.F)}});
  } else {
    Verdict u = is_unitary_rep(R.rep);
    std::printf("unitarized %d x %d corep: unitarity defect %.3e\n", R.rep.size,
                R.rep.size, u.defect);
  }
  return 0;
}

void print_sub_summary(const SubQuantumGroup& B, const HopfStructure* H) {
  std::printf("carrier rank %d inside dim %d; presented blocks %s\n",
              B.carrier.rank(), B.ambient->dim(),
              blocks_str(B.presented->algebra()->blocks()).c_str());
  std::printf("generators: %zu unitary corep(s)\n", B.generators.size());
  if (H) print_verdict("hopf axioms", H->verified);
}

int cmd_subgroup_gen(const std::string& gpath, const std::string& tpath,
                     const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  RepMatrix T = load_rep(tpath, G->algebra());
  SubQuantumGroup B = generate_BT(T, *G);
  HopfStructure H = hopf_structure(B);
  if (json_mode(opt))
    emit(io::sub_to_json(B, &H));
  else
    print_sub_summary(B, &H);
  return 0;
}

int cmd_bohr(const std::string& gpath, const std::vector<std::string>& tpaths,
             const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  std::vector<RepMatrix> seeds;
  for (const auto& p : tpaths) seeds.push_back(load_rep(p, G->algebra()));
  SubQuantumGroup B = bohr_from_reps(*G, seeds, 1e-8, opt.seed);
  HopfStructure H = hopf_structure(B);
  if (json_mode(opt))
    emit(io::sub_to_json(B, &H));
  else
    print_sub_summary(B, &H);
  return 0;
}

int cmd_hopf(const std::string& bpath, const Options& opt) {
  SubQuantumGroup B = io::sub_from_json(io::parse_file(bpath));
  HopfStructure H = hopf_structure(B);
  if (json_mode(opt)) {
    emit(json{{"counit", io::functional_to_json(H.counit)},
              {"antipode", io::matrix_to_json(H.antipode.matrix)},
              {"verified", io::verdict_to_json(H.verified)}});
  } else {
    std::printf("counit:");
    for (int i = 0; i < B.presented->dim(); ++i)
      std::printf(" %s", fmt_complex(H.counit.covector(i)).c_str());
    std::printf("\n");
    print_verdict("hopf axioms", H.verified);
  }
  return H.verified.pass ? 0 : 1;
}

int cmd_factor(const std::string& kpath, const std::string& phipath,
               const std::string& bpath, const Options& opt) {
  QsgPtr K = load_qsg(kpath, opt.tol);
  LinearMap Phi = io::map_from_json(io::parse_file(phipath));
  SubQuantumGroup B = io::sub_from_json(io::parse_file(bpath));
  LinearMap bPhi = factor_through_bohr(Phi, *K, B);
  if (json_mode(opt)) {
    emit(io::map_to_json(bPhi));
  } else {
    double resid = rel_defect(B.chi.matrix * bPhi.matrix, Phi.matrix);
    std::printf("factored through the compactification: residual %.3e\n", resid);
  }
  return 0;
}

int cmd_kacq(const std::string& gpath, const std::string& family,
             const Options& opt) {
  QsgPtr G = load_qsg(gpath, opt.tol);
  StateFamily F = family == "full"
                      ? tracial_state_family(G->algebra())
                      : io::family_from_json(io::parse_file(family), G->algebra());
  QuotientResult R = kac_quotient(*G, F);
  if (json_mode(opt)) {
    emit(io::quotient_to_json(R));
  } else {
    std::printf("null ideal rank %d of %d\n", R.ideal.rank(), G->dim());
    if (R.quotient_algebra)
      std::printf("quotient blocks %s\n",
                  blocks_str(R.quotient_algebra->blocks()).c_str());
    print_verdict("delta descends", R.descends);
    print_verdict("compact quantum group", R.cqg);
    print_verdict("kac type", R.kac);
  }
  return R.descends.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional quantum (semi)group calculator"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "validation tolerance")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized decompositions")
      ->capture_default_str();

  int rc = 0;
  auto run = [&rc](auto f) {
    return [&rc, f]() { rc = f(); };
  };

  // catalog list | emit <name>
  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog entries");
  cat_list->callback(run([&]() { return cmd_catalog_list(opt); }));
  std::string emit_name;
  auto* cat_emit = cat->add_subcommand("emit", "print an entry as JSON");
  cat_emit->add_option("name", emit_name, "entry name")->required();
  cat_emit->callback(run([&]() { return cmd_catalog_emit(emit_name); }));

  // check <G.json>
  std::string check_path;
  auto* check = app.add_subcommand(
      "check", "validate a quantum semigroup and test cancellation");
  check->add_option("G", check_path, "quantum semigroup file")->required();
  check->callback(run([&]() { return cmd_check(check_path, opt); }));

  // haar <G.json>
  std::string haar_path;
  auto* haar = app.add_subcommand("haar", "compute the Haar state");
  haar->add_option("G", haar_path, "quantum semigroup file")->required();
  haar->callback(run([&]() { return cmd_haar(haar_path, opt); }));

  // rep check|dsum|tprod|conj|admissible|unitarize
  auto* rep = app.add_subcommand("rep", "corepresentation operations");
  rep->require_subcommand(1);
  std::string rep_g, rep_t1, rep_t2;
  auto* rc_check = rep->add_subcommand("check", "classify a matrix over A");
  rc_check->add_option("G", rep_g)->required();
  rc_check->add_option("T", rep_t1)->required();
  rc_check->callback(run([&]() { return cmd_rep_check(rep_g, rep_t1, opt); }));
  auto* rc_dsum = rep->add_subcommand("dsum", "direct sum of two reps");
  rc_dsum->add_option("G", rep_g)->required();
  rc_dsum->add_option("T1", rep_t1)->required();
  rc_dsum->add_option("T2", rep_t2)->required();
  rc_dsum->callback(
      run([&]() { return cmd_rep_combine("dsum", rep_g, rep_t1, rep_t2, opt); }));
  auto* rc_tprod = rep->add_subcommand("tprod", "tensor product of two reps");
  rc_tprod->add_option("G", rep_g)->required();
  rc_tprod->add_option("T1", rep_t1)->required();
  rc_tprod->add_option("T2", rep_t2)->required();
  rc_tprod->callback(run(
      [&]() { return cmd_rep_combine("tprod", rep_g, rep_t1, rep_t2, opt); }));
  auto* rc_conj = rep->add_subcommand("conj", "conjugate of a unitary rep");
  rc_conj->add_option("G", rep_g)->required();
  rc_conj->add_option("T", rep_t1)->required();
  rc_conj->callback(run([&]() { return cmd_rep_conj(rep_g, rep_t1, opt); }));
  auto* rc_adm = rep->add_subcommand("admissible", "admissibility verdict");
  rc_adm->add_option("G", rep_g)->required();
  rc_adm->add_option("T", rep_t1)->required();
  rc_adm->callback(run([&]() { return cmd_rep_admissible(rep_g, rep_t1, opt); }));
  auto* rc_uni = rep->add_subcommand("unitarize", "unitarize an admissible rep");
  rc_uni->add_option("G", rep_g)->required();
  rc_uni->add_option("T", rep_t1)->required();
  rc_uni->callback(run([&]() { return cmd_rep_unitarize(rep_g, rep_t1, opt); }));

  // subgroup gen <G.json> <T.json>
  auto* sub = app.add_subcommand("subgroup", "compact quantum subgroup");
  sub->require_subcommand(1);
  std::string sub_g, sub_t;
  auto* sub_gen = sub->add_subcommand(
      "gen", "compact quantum group generated by a bounded representation");
  sub_gen->add_option("G", sub_g)->required();
  sub_gen->add_option("T", sub_t)->required();
  sub_gen->callback(run([&]() { return cmd_subgroup_gen(sub_g, sub_t, opt); }));

  // bohr from-reps <G.json> <T1.json> ...
  auto* bohr = app.add_subcommand("bohr", "quantum Bohr compactification");
  bohr->require_subcommand(1);
  std::string bohr_g;
  std::vector<std::string> bohr_ts;
  auto* bohr_fr = bohr->add_subcommand("from-reps",
                                       "compactification from seed reps");
  bohr_fr->add_option("G", bohr_g)->required();
  bohr_fr->add_option("T", bohr_ts, "seed representation files");
  bohr_fr->callback(run([&]() { return cmd_bohr(bohr_g, bohr_ts, opt); }));

  // hopf <B.json>
  std::string hopf_path;
  auto* hopf = app.add_subcommand("hopf", "counit and antipode of a bundle");
  hopf->add_option("B", hopf_path)->required();
  hopf->callback(run([&]() { return cmd_hopf(hopf_path, opt); }));

  // factor <K.json> <Phi.json> <B.json>
  std::string fac_k, fac_phi, fac_b;
  auto* fac = app.add_subcommand("factor",
                                 "factor a morphism through a compactification");
  fac->add_option("K", fac_k)->required();
  fac->add_option("Phi", fac_phi)->required();
  fac->add_option("B", fac_b)->required();
  fac->callback(run([&]() { return cmd_factor(fac_k, fac_phi, fac_b, opt); }));

  // kacq <G.json> --family full|<F.json>
  std::string kacq_g, kacq_family = "full";
  auto* kacq = app.add_subcommand("kacq", "canonical Kac quotient");
  kacq->add_option("G", kacq_g)->required();
  kacq->add_option("--family", kacq_family,
                   "'full' or a tracial-family JSON file")
      ->capture_default_str();
  kacq->callback(run([&]() { return cmd_kacq(kacq_g, kacq_family, opt); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are input errors
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 1;
  }
  return rc;
}
