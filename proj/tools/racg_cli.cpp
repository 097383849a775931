// Command line front end: invariants of right-angled Coxeter groups and
// their Davis complexes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "racg/corpus.hpp"
#include "racg/coxeter.hpp"
#include "racg/davis.hpp"
#include "racg/errors.hpp"
#include "racg/fibration.hpp"
#include "racg/homology.hpp"
#include "racg/json_io.hpp"
#include "racg/l2.hpp"
#include "racg/simplicial.hpp"
#include "racg/sphere2.hpp"

using nlohmann::json;
using namespace racg;

namespace {

int env_guard(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    throw ParseError(std::string("environment variable ") + name + " is not an integer");
  }
}

int cover_guard() { return env_guard("RACG_MAX_COVER_LOG2", 22); }
int orient_guard() { return env_guard("RACG_MAX_ORIENT_CLASSES", 20); }
int doubling_guard() { return env_guard("RACG_MAX_DOUBLING_P", 16); }

Word parse_word(const Racg& W, const std::vector<std::string>& letters) {
  std::vector<Vertex> flat;
  for (const auto& tok : letters) {
    std::string cur;
    for (char c : tok) {
      if (c == '.' || c == ' ') {
        if (!cur.empty()) flat.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) flat.push_back(cur);
  }
  return W.normal_form_labels(flat);
}

std::string betti_json(const BettiVector& b) {
  json out = json::array();
  for (int d = 0; d <= b.max_degree(); ++d)
    out.push_back(b.is_known(d) ? json(to_string(b.values[d])) : json(nullptr));
  return out.dump();
}

std::vector<Word> load_chambers(const Racg& W, const std::string& path) {
  json j = json::parse(read_text_file(path));
  const json& arr = j.is_array() ? j : j.at("chambers");
  std::vector<Word> out;
  for (const auto& cw : arr) {
    std::vector<std::string> letters;
    for (const auto& l : cw) letters.push_back(l.get<std::string>());
    out.push_back(W.normal_form_labels(letters));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of right-angled Coxeter groups and Davis complexes"};
  app.require_subcommand(1);
  bool as_json = false;
  bool assume_flag = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--assume-flag", assume_flag,
               "accept simplicial input as the clique complex of its 1-skeleton");

  std::string uri, nerve_uri, boundary_uri, emit_path, orient_str, chambers_path;
  std::vector<std::string> word_args;
  int arg_n = 0, arg_m = 1, arg_l = 0, arg_N = 0;

  // --- coxeter group commands
  auto* c_nf = app.add_subcommand("nf", "normal form of a word in W_L");
  c_nf->add_option("--nerve", nerve_uri, "nerve complex (corpus: URI or file)")->required();
  c_nf->add_option("word", word_args, "generator labels, dotted or separate");

  auto* c_ball = app.add_subcommand("ball", "elements of W_L with length <= N");
  c_ball->add_option("--nerve", nerve_uri)->required();
  c_ball->add_option("-N", arg_N)->required();

  auto* c_cosets = app.add_subcommand("cosets", "spherical cosets with representative length <= N");
  c_cosets->add_option("--nerve", nerve_uri)->required();
  c_cosets->add_option("-N", arg_N)->required();

  auto* c_nerve = app.add_subcommand("nerve", "nerve L(C) of a convex union of chambers");
  c_nerve->add_option("--nerve", nerve_uri)->required();
  c_nerve->add_option("--chambers", chambers_path, "JSON list of chamber words")->required();

  // --- homology commands
  auto* c_hom = app.add_subcommand("homology", "rational Betti numbers of a complex");
  c_hom->add_option("complex", uri)->required();

  auto* c_ghs = app.add_subcommand("ghs-check", "generalized homology sphere test");
  c_ghs->add_option("complex", uri)->required();
  c_ghs->add_option("-n", arg_n, "expected dimension")->required();

  auto* c_ghd = app.add_subcommand("ghd-check", "generalized homology disk test");
  c_ghd->add_option("complex", uri)->required();
  c_ghd->add_option("--boundary", boundary_uri, "boundary subcomplex file")->required();
  c_ghd->add_option("-n", arg_n, "expected dimension")->required();

  auto* c_pm = app.add_subcommand("pseudomanifold", "pseudomanifold test");
  c_pm->add_option("complex", uri)->required();

  auto* c_sl = app.add_subcommand("spherical-links", "spherical links in codimensions <= m");
  c_sl->add_option("complex", uri)->required();
  c_sl->add_option("-m", arg_m)->required();

  // --- davis complex commands
  auto* c_kappa = app.add_subcommand("kappa", "kappa(L), the orbihedral Euler characteristic");
  c_kappa->add_option("complex", uri)->required();

  auto* c_db = app.add_subcommand("davis-ball", "finite ball of the Davis complex");
  c_db->add_option("--nerve", nerve_uri)->required();
  c_db->add_option("-N", arg_N)->required();
  bool as_off = false;
  c_db->add_flag("--off", as_off, "OFF-like text output");

  auto* c_cover = app.add_subcommand("commutator-cover", "the complex P_L in [-1,1]^p");
  c_cover->add_option("complex", uri)->required();
  c_cover->add_flag("--off", as_off);

  auto* c_npc = app.add_subcommand("npc-check", "vertex links of P_L are flag (Gromov)");
  c_npc->add_option("complex", uri)->required();

  auto* c_chi = app.add_subcommand("chi-check", "chi(P_L) = 2^p kappa(L)");
  c_chi->add_option("complex", uri)->required();

  // --- l2 commands
  auto* c_l2 = app.add_subcommand("l2", "closed-form l2-Betti numbers");
  std::string expr_str, recognize_uri;
  c_l2->add_option("--expr", expr_str, "calculus expression, e.g. (join (points 3) (points 3))");
  c_l2->add_option("--recognize", recognize_uri, "recognize a complex into the calculus");
  c_l2->add_option("complex", uri, "complex to evaluate via recognition");

  auto* c_at = app.add_subcommand("atiyah-check", "alternating sum of l2-Betti numbers vs kappa");
  c_at->add_option("complex", uri)->required();

  // --- sphere certification
  auto* c_cert = app.add_subcommand("certify-s2", "vanishing certificate for a flag 2-sphere");
  c_cert->add_option("complex", uri)->required();
  c_cert->add_option("--emit-cert", emit_path, "write the certificate JSON here");

  auto* c_ver = app.add_subcommand("verify-cert", "re-validate a certificate independently");
  c_ver->add_option("certificate", uri)->required();

  // --- fibration machinery
  auto* c_fib = app.add_subcommand("fibration", "octahedral local model and D+ criterion");
  c_fib->require_subcommand(1);
  auto* f_local = c_fib->add_subcommand("local-model", "B(l) and the sheet P(l)");
  f_local->add_option("-n", arg_n)->required();
  f_local->add_option("-l", arg_l)->required();
  auto* f_dom = c_fib->add_subcommand("domain", "doubling fundamental domain D(p)");
  f_dom->add_option("complex", uri)->required();
  auto* f_dplus = c_fib->add_subcommand("dplus", "D+ disk criterion for given orientations");
  f_dplus->add_option("complex", uri)->required();
  f_dplus->add_option("--orient", orient_str, "signs per class, e.g. ++-")->required();
  auto* f_search = c_fib->add_subcommand("search", "search orientations for a passing D+");
  f_search->add_option("complex", uri)->required();

  // --- corpus
  auto* c_corpus = app.add_subcommand("corpus", "built-in example complexes");
  c_corpus->require_subcommand(1);
  auto* corpus_list = c_corpus->add_subcommand("list", "list fixed corpus names");
  auto* corpus_show = c_corpus->add_subcommand("show", "print a corpus complex as JSON");
  std::string corpus_name;
  corpus_show->add_option("name", corpus_name)->required();
  auto* corpus_check = c_corpus->add_subcommand("check", "verify corpus annotations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_nf->parsed()) {
      Racg W(resolve_flag_complex(nerve_uri, assume_flag));
      Word w = parse_word(W, word_args);
      std::cout << word_str(W.nerve(), w) << "\n";
    } else if (c_ball->parsed()) {
      Racg W(resolve_flag_complex(nerve_uri, assume_flag));
      auto elements = W.ball(arg_N);
      if (as_json) {
        json out = json::array();
        for (const auto& w : elements) out.push_back(word_str(W.nerve(), w));
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& w : elements) std::cout << word_str(W.nerve(), w) << "\n";
        std::cout << "# " << elements.size() << " elements\n";
      }
    } else if (c_cosets->parsed()) {
      Racg W(resolve_flag_complex(nerve_uri, assume_flag));
      auto cosets = spherical_cosets(W, arg_N);
      for (const auto& c : cosets) {
        std::cout << word_str(W.nerve(), c.rep) << " W_{";
        for (size_t i = 0; i < c.sigma.size(); ++i)
          std::cout << (i ? "," : "") << W.nerve().label(c.sigma[i]);
        std::cout << "}\n";
      }
      std::cout << "# " << cosets.size() << " spherical cosets\n";
    } else if (c_nerve->parsed()) {
      Racg W(resolve_flag_complex(nerve_uri, assume_flag));
      auto result = nerve_of_convex_union(W, load_chambers(W, chambers_path));
      std::cout << flag_to_json(result.nerve) << "\n";
    } else if (c_hom->parsed()) {
      SimplicialComplex K = simplicial_from_json(
          uri.rfind("corpus:", 0) == 0
              ? simplicial_to_json(SimplicialComplex::from_flag(resolve_flag_complex(uri)))
              : read_text_file(uri));
      BettiVector b = betti(K);
      std::cout << (as_json ? betti_json(b) : b.str()) << "\n";
    } else if (c_ghs->parsed()) {
      SimplicialComplex K = SimplicialComplex::from_flag(resolve_flag_complex(uri, true));
      bool ok = is_GHS(K, arg_n);
      std::cout << (ok ? "GHS" : "not-GHS") << "\n";
      return ok ? 0 : 2;
    } else if (c_ghd->parsed()) {
      SimplicialComplex D = simplicial_from_json(read_text_file(uri));
      SimplicialComplex B = simplicial_from_json(read_text_file(boundary_uri));
      bool ok = is_GHD(D, B, arg_n);
      std::cout << (ok ? "GHD" : "not-GHD") << "\n";
      return ok ? 0 : 2;
    } else if (c_pm->parsed()) {
      SimplicialComplex K = SimplicialComplex::from_flag(resolve_flag_complex(uri, true));
      std::cout << (is_pseudomanifold(K) ? "pseudomanifold" : "not-pseudomanifold") << "\n";
    } else if (c_sl->parsed()) {
      SimplicialComplex K = SimplicialComplex::from_flag(resolve_flag_complex(uri, true));
      std::cout << (spherical_links_codim(K, arg_m) ? "true" : "false") << "\n";
    } else if (c_kappa->parsed()) {
      std::cout << to_string(kappa(resolve_flag_complex(uri, assume_flag))) << "\n";
    } else if (c_db->parsed()) {
      Racg W(resolve_flag_complex(nerve_uri, assume_flag));
      CubicalComplex X = davis_ball(W, arg_N);
      std::cout << (as_off ? cubical_to_off(X) : cubical_to_json(X));
    } else if (c_cover->parsed()) {
      CubicalComplex X = commutator_cover(resolve_flag_complex(uri, assume_flag), cover_guard());
      std::cout << (as_off ? cubical_to_off(X) : cubical_to_json(X));
    } else if (c_npc->parsed()) {
      FlagComplex L = resolve_flag_complex(uri, assume_flag);
      CubicalComplex X = commutator_cover(L, cover_guard());
      bool ok = X.npc_check();
      std::cout << (ok ? "nonpositively-curved" : "link-condition-failed") << "\n";
      return ok ? 0 : 2;
    } else if (c_chi->parsed()) {
      ChiOrbReport r = chi_orb_consistency(resolve_flag_complex(uri, assume_flag), cover_guard());
      std::cout << r.str() << "\n";
      if (!r.consistent()) throw LemmaViolation("chi(P_L) != 2^p kappa(L)");
    } else if (c_l2->parsed()) {
      if (!expr_str.empty()) {
        L2Expr e = parse_l2_expr(expr_str);
        L2Result r = l2_betti(e);
        std::cout << (as_json ? betti_json(r.betti) : r.str()) << "\n";
      } else if (!recognize_uri.empty()) {
        L2Expr e = recognize(resolve_flag_complex(recognize_uri, assume_flag));
        std::cout << (e.kind() == L2Expr::Kind::Opaque ? "unknown" : e.str()) << "\n";
      } else if (!uri.empty()) {
        L2Result r = l2_betti_of_complex(resolve_flag_complex(uri, assume_flag));
        std::cout << (as_json ? betti_json(r.betti) : r.str()) << "\n";
      } else {
        throw ParseError("l2: pass --expr, --recognize, or a complex");
      }
    } else if (c_at->parsed()) {
      AtiyahReport r = atiyah_check(resolve_flag_complex(uri, assume_flag));
      std::cout << r.str() << "\n";
      if (!r.consistent()) throw LemmaViolation("Atiyah consistency failed");
    } else if (c_cert->parsed()) {
      Certificate cert = certify(resolve_flag_complex(uri, assume_flag));
      ValidationReport v = verify_certificate(cert);
      if (!emit_path.empty()) write_text_file(emit_path, certificate_to_json(cert));
      std::cout << "certified: " << cert.kind_str() << " root, " << cert.node_count()
                << " nodes, " << cert.leaf_count() << " leaves; validator "
                << (v.ok ? "ok" : "FAILED") << "\n";
      if (!v.ok) throw LemmaViolation("certificate failed independent validation");
    } else if (c_ver->parsed()) {
      Certificate cert = certificate_from_json(read_text_file(uri));
      ValidationReport v = verify_certificate(cert);
      if (v.ok) {
        std::cout << "certificate valid (" << cert.node_count() << " nodes)\n";
      } else {
        for (const auto& f : v.failures) std::cout << "invalid: " << f << "\n";
        return 2;
      }
    } else if (f_local->parsed()) {
      SimplicialComplex B = ball_B(arg_n, arg_l);
      SimplicialComplex P = sheet(arg_n, arg_l);
      BallReport r = homology_ball_report(B, octahedron_collapse_priority());
      std::cout << "B(" << arg_l << ") in O^" << arg_n - 1 << ": f = " << B.f_vector().str()
                << ", " << r.str() << "\n";
      std::cout << "sheet P(" << arg_l << "): f = " << P.f_vector().str() << "\n";
    } else if (f_dom->parsed()) {
      Racg W(resolve_flag_complex(uri, assume_flag));
      ChamberDomain D = doubling_domain(W, doubling_guard());
      std::cout << "|D| = " << D.chambers.size()
                << ", bijection onto (Z_2)^p: " << (D.bijection_onto_quotient ? "yes" : "NO")
                << ", faces paired: " << (D.faces_paired ? "yes" : "NO") << "\n";
      FaceClasses fc = hypersurface_classes(W, D);
      std::cout << fc.faces.size() << " boundary faces in " << fc.num_classes
                << " hypersurface classes\n";
    } else if (f_dplus->parsed()) {
      Racg W(resolve_flag_complex(uri, assume_flag));
      ChamberDomain D = doubling_domain(W, doubling_guard());
      FaceClasses fc = hypersurface_classes(W, D);
      OrientationAssignment o;
      for (char c : orient_str) {
        if (c == '+')
          o.signs.push_back(+1);
        else if (c == '-')
          o.signs.push_back(-1);
        else
          throw ParseError("--orient expects a string of + and -");
      }
      DplusResult r = dplus_check(W, D, fc, o);
      std::cout << r.statement << "\n";
      return r.is_disk ? 0 : 2;
    } else if (f_search->parsed()) {
      Racg W(resolve_flag_complex(uri, assume_flag));
      ChamberDomain D = doubling_domain(W, doubling_guard());
      auto found = search_orientations(W, D, orient_guard());
      if (found) {
        std::cout << "passing orientation: ";
        for (int s : found->signs) std::cout << (s > 0 ? '+' : '-');
        std::cout << "\n";
      } else {
        std::cout << "none\n";
        return 2;
      }
    } else if (corpus_list->parsed()) {
      for (const auto& n : corpus_names()) std::cout << n << "\n";
    } else if (corpus_show->parsed()) {
      std::cout << flag_to_json(corpus_entry(corpus_name).complex) << "\n";
    } else if (corpus_check->parsed()) {
      bool all_ok = true;
      for (const auto& n : corpus_names()) {
        CorpusEntry e = corpus_entry(n);
        bool ok = e.complex.f_vector() == e.expected_f;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok " : "BAD ") << n << " f = " << e.complex.f_vector().str() << "\n";
      }
      if (!all_ok) return 2;
    }
  } catch (const LemmaViolation& e) {
    std::cerr << "paper-lemma violation: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
