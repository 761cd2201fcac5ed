#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "rlw/catalog.hpp"
#include "rlw/completion.hpp"
#include "rlw/nested_sum.hpp"
#include "rlw/parallel.hpp"
#include "rlw/properties.hpp"

using namespace rlw;
using namespace rlw::cli;

namespace {

  std::vector<Elem> parse_elems(std::string const& text) {
    std::vector<Elem> out;
    std::string       tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) {
        continue;
      }
      try {
        size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
      } catch (std::exception const&) {
        throw Error(ErrorKind::Usage, "not an element list: " + text);
      }
    }
    return out;
  }

  Signature parse_signature(std::string const& text) {
    Signature s;
    if (text.empty() || text == "plain") {
      return s;
    }
    std::stringstream ss(text);
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "f") {
        s.f = true;
      } else if (tok == "bot") {
        s.bot = true;
      } else if (tok == "top") {
        s.top = true;
      } else {
        throw Error(ErrorKind::Usage, "unknown constant in signature: " + tok);
      }
    }
    return s;
  }

  ProfileFilter parse_filter(std::vector<std::string> const& props) {
    ProfileFilter f;
    for (auto const& p : props) {
      add_property(f, p);
    }
    return f;
  }

  json profile_json(PropertyProfile const& p) {
    json j;
    j["commutative"] = p.commutative;
    j["idempotent"]  = p.idempotent;
    if (p.n_potent) {
      j["n_potent"] = *p.n_potent;
    }
    j["square_increasing"] = p.square_increasing;
    j["square_decreasing"] = p.square_decreasing;
    j["integral"]          = p.integral;
    j["bounded"]           = p.bounded;
    j["semilinear"]        = p.semilinear;
    j["admissible"]        = p.admissible;
    j["lower_involutive"]  = p.lower_involutive;
    if (p.involutive_f) {
      j["cyclic_f"]           = *p.cyclic_f;
      j["left_involutive_f"]  = *p.left_involutive_f;
      j["right_involutive_f"] = *p.right_involutive_f;
      j["involutive_f"]       = *p.involutive_f;
    }
    return j;
  }

  std::string algebras_text(std::vector<Algebra> const& v) {
    std::string s;
    for (auto const& A : v) {
      s += serialize(A);
    }
    return s;
  }

  json algebras_json(std::vector<Algebra> const& v) {
    json arr = json::array();
    for (auto const& A : v) {
      arr.push_back(to_json(A));
    }
    return arr;
  }

  void write_numbered(std::string const& dir, std::string const& stem, std::vector<Algebra> const& v) {
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < v.size(); ++i) {
      save_algebra(v[i], std::filesystem::path(dir) / (stem + "-" + std::to_string(i) + ".json"));
    }
  }

  struct Globals {
    bool json_output = false;
    int  workers     = default_workers();
  };

  int env_bound() {
    if (char const* s = std::getenv("RLW_BOUND")) {
      int b = std::atoi(s);
      if (b > 0) {
        return b;
      }
    }
    return 7;
  }

  int run(Globals const& g, Invocation const& inv, std::function<Outcome()> const& body) {
    auto    start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (std::exception const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_error;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.json_output) {
      std::cout << run_manifest(inv, out, secs).dump(2) << "\n";
    } else {
      std::cout << out.text;
      if (!out.text.empty() && out.text.back() != '\n') {
        std::cout << "\n";
      }
    }
    return out.status;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite residuated lattices: structure, constructions and amalgamation"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_output, "print a machine-readable run manifest");
  app.add_option("--workers", g.workers, "worker threads (default RLW_WORKERS or all cores)");

  std::function<int()> action;

  // catalog
  std::string              cat_family;
  std::vector<std::string> cat_params;
  std::string              cat_mode, cat_out;
  bool                     cat_list = false, cat_partial = false;
  auto*                    cat      = app.add_subcommand("catalog", "print a catalog algebra");
  cat->add_option("family", cat_family, "goedel rsa sugihara com luk dmm figure");
  cat->add_option("params", cat_params, "integer parameters, or a figure name");
  cat->add_option("--mode", cat_mode, "luk: mv or hoop");
  cat->add_option("-o,--output", cat_out, "write the algebra to this file");
  cat->add_flag("--list", cat_list, "list families and figures");
  cat->add_flag("--partial", cat_partial, "figures: the partial diagram instead of its least completion");
  cat->callback([&] {
    action = [&] {
      Invocation inv{"catalog", {}, {{"family", cat_family}, {"params", cat_params}, {"mode", cat_mode}}};
      return run(g, inv, [&] {
        Outcome o;
        if (cat_list || cat_family.empty()) {
          o.verdict = "List";
          o.text    = "families: goedel <m>, rsa <m>, sugihara <n>, com <m> <n>, luk <n> [--mode mv|hoop], dmm <p>\n"
                      "figures:";
          for (auto const& f : figure_names()) {
            o.text += " " + f;
          }
          o.certificate["figures"] = figure_names();
          return o;
        }
        Algebra A;
        if (cat_family == "figure") {
          if (cat_params.size() != 1) {
            throw Error(ErrorKind::Usage, "figure takes one name");
          }
          if (cat_partial) {
            json P      = to_json(figure_partial(cat_params[0]));
            o.verdict   = "PartialAlgebra";
            o.certificate["partial"] = P;
            if (!cat_out.empty()) {
              write_file(cat_out, P.dump() + "\n");
              o.text = "wrote " + cat_out;
            } else {
              o.text = P.dump();
            }
            return o;
          }
          A = make_figure(cat_params[0]);
        } else {
          std::vector<int> ps;
          for (auto const& p : cat_params) {
            ps.push_back(parse_elems(p).at(0));
          }
          A = make_family(cat_family, ps, cat_mode);
        }
        o.verdict              = "Algebra";
        o.certificate["algebra"] = to_json(A);
        if (!cat_out.empty()) {
          save_algebra(A, cat_out);
          o.text = "wrote " + cat_out;
        } else {
          o.text = serialize(A);
        }
        return o;
      });
    };
  });

  // complete
  std::string cmp_file, cmp_out;
  bool        cmp_all   = false;
  std::size_t cmp_limit = 1;
  auto*       cmp       = app.add_subcommand("complete", "complete a partial algebra");
  cmp->add_option("file", cmp_file, "partial algebra file")->required();
  auto* cmp_all_opt = cmp->add_flag("--all", cmp_all, "every completion");
  cmp->add_option("--limit", cmp_limit, "at most this many completions")->excludes(cmp_all_opt);
  cmp->add_option("-o,--output-dir", cmp_out, "write completions as files");
  cmp->callback([&] {
    action = [&] {
      Invocation inv{"complete", {cmp_file}, {{"all", cmp_all}, {"limit", cmp_all ? 0 : cmp_limit}}};
      return run(g, inv, [&] {
        CompletionOptions opt;
        opt.limit   = cmp_all ? 0 : cmp_limit;
        opt.workers = g.workers;
        auto    res = search_completions(load_partial(cmp_file), opt);
        Outcome o;
        o.verdict                    = res.algebras.empty() ? "NoCompletion" : "Completed";
        o.status                     = res.algebras.empty() ? exit_no : exit_yes;
        o.certificate["completions"] = algebras_json(res.algebras);
        o.certificate["truncated"]   = res.truncated;
        o.certificate["nodes"]       = res.nodes;
        o.text = std::to_string(res.algebras.size()) + (res.truncated ? "+" : "") + " completion(s), "
                 + std::to_string(res.nodes) + " search nodes\n" + algebras_text(res.algebras);
        if (!cmp_out.empty()) {
          write_numbered(cmp_out, "completion", res.algebras);
        }
        return o;
      });
    };
  });

  // enumerate
  int                      en_size = 0;
  std::vector<std::string> en_props;
  std::string              en_sig, en_out;
  bool                     en_count = false;
  auto*                    en       = app.add_subcommand("enumerate", "every residuated chain of a given size");
  en->add_option("--size", en_size, "number of elements")->required();
  en->add_option("--prop", en_props, "required property, e.g. commutative, idempotent, potent=2");
  en->add_option("--sig", en_sig, "constants in the language, e.g. f or f,bot,top");
  en->add_flag("--count", en_count, "print only the number of chains");
  en->add_option("-o,--output-dir", en_out, "write chains as files");
  en->callback([&] {
    action = [&] {
      Invocation inv{"enumerate", {}, {{"size", en_size}, {"props", en_props}, {"sig", en_sig}}};
      return run(g, inv, [&] {
        auto    v = enumerate_chains(en_size, parse_filter(en_props), parse_signature(en_sig), g.workers);
        Outcome o;
        o.verdict               = "Enumerated";
        o.certificate["count"]  = v.size();
        o.certificate["chains"] = algebras_json(v);
        o.text                  = std::to_string(v.size()) + " chain(s)\n" + (en_count ? "" : algebras_text(v));
        if (!en_out.empty()) {
          write_numbered(en_out, "chain", v);
        }
        return o;
      });
    };
  });

  // con
  std::string con_file;
  auto*       con = app.add_subcommand("con", "congruence lattice");
  con->add_option("file", con_file, "algebra file or catalog address")->required();
  con->callback([&] {
    action = [&] {
      Invocation inv{"con", {con_file}, json::object()};
      return run(g, inv, [&] {
        Algebra A    = load_algebra_or_catalog(con_file);
        auto    cons = congruences(A);
        auto    cns  = convex_normal_subalgebras(A);
        auto    mono = monolith(cons);
        auto    at   = congruence_atoms(cons);
        Outcome o;
        o.verdict  = "Congruences";
        json arr   = json::array();
        std::ostringstream os;
        os << cons.size() << " congruence(s)\n";
        for (size_t i = 0; i < cons.size(); ++i) {
          bool atom = std::find(at.begin(), at.end(), i) != at.end();
          arr.push_back({{"blocks", congruence_json(cons[i])}, {"cns", cns[i]}, {"atom", atom}});
          os << "  " << i << ": " << blocks_str(cons[i]) << "  e-class " << elems_str(cns[i])
             << (atom ? "  atom" : "") << (mono && *mono == i ? "  monolith" : "") << "\n";
        }
        o.certificate["congruences"] = arr;
        if (mono) {
          o.certificate["monolith"] = *mono;
        }
        o.text = os.str();
        return o;
      });
    };
  });

  // sub
  std::string sub_file;
  auto*       sub = app.add_subcommand("sub", "subuniverses");
  sub->add_option("file", sub_file, "algebra file or catalog address")->required();
  sub->callback([&] {
    action = [&] {
      Invocation inv{"sub", {sub_file}, json::object()};
      return run(g, inv, [&] {
        auto    subs = subuniverses(load_algebra_or_catalog(sub_file));
        Outcome o;
        o.verdict                    = "Subuniverses";
        o.certificate["subuniverses"] = subs;
        o.text                       = std::to_string(subs.size()) + " subuniverse(s)\n";
        for (auto const& s : subs) {
          o.text += "  " + elems_str(s) + "\n";
        }
        return o;
      });
    };
  });

  // cep
  std::string cep_file;
  auto*       cep = app.add_subcommand("cep", "congruence extension property");
  cep->add_option("file", cep_file, "algebra file or catalog address")->required();
  cep->callback([&] {
    action = [&] {
      Invocation inv{"cep", {cep_file}, json::object()};
      return run(g, inv, [&] {
        auto    r = has_cep(load_algebra_or_catalog(cep_file));
        Outcome o;
        o.verdict     = r.holds ? "Holds" : "Fails";
        o.status      = r.holds ? exit_yes : exit_no;
        o.certificate = cep_json(r);
        o.text        = o.verdict + "\n";
        if (!r.holds) {
          o.text += "subuniverse " + elems_str(r.subuniverse) + ", congruence " + o.certificate["theta"].dump()
                    + (r.generator ? " generated by (" + std::to_string(r.generator->first) + ","
                                         + std::to_string(r.generator->second) + ")"
                                   : "")
                    + ", least extension " + blocks_str(r.extension) + "\n";
        }
        return o;
      });
    };
  });

  // hom
  std::string              hom_b, hom_d;
  bool                     hom_inj = false;
  std::vector<std::string> hom_commute;
  std::size_t              hom_limit = 0;
  auto*                    hom       = app.add_subcommand("hom", "homomorphisms B -> D");
  hom->add_option("B", hom_b)->required();
  hom->add_option("D", hom_d)->required();
  hom->add_flag("--injective", hom_inj);
  hom->add_option("--commute", hom_commute, "A phi chi: only maps h with h(phi(a)) = chi(a)")->expected(3);
  hom->add_option("--limit", hom_limit, "stop after this many maps");
  hom->callback([&] {
    action = [&] {
      Invocation inv{"hom", {hom_b, hom_d}, {{"injective", hom_inj}, {"commute", hom_commute}}};
      if (!hom_commute.empty()) {
        inv.inputs.push_back(hom_commute[0]);
      }
      return run(g, inv, [&] {
        Algebra    B = load_algebra_or_catalog(hom_b), D = load_algebra_or_catalog(hom_d);
        HomOptions opt;
        opt.injective = hom_inj;
        if (!hom_commute.empty()) {
          Algebra A   = load_algebra_or_catalog(hom_commute[0]);
          auto    phi = parse_elems(hom_commute[1]), chi = parse_elems(hom_commute[2]);
          if (static_cast<int>(phi.size()) != A.size() || static_cast<int>(chi.size()) != A.size()) {
            throw Error(ErrorKind::Usage, "phi and chi must list one element per element of A");
          }
          require_embedding(Morphism{A, B, phi});
          if (!is_homomorphism(A, D, chi)) {
            throw Error(ErrorKind::Usage, "chi is not a homomorphism");
          }
          opt.commute_with = std::make_pair(phi, chi);
        }
        std::vector<std::vector<Elem>> maps;
        for_each_hom(B, D, opt, [&](std::vector<Elem> const& h) {
          maps.push_back(h);
          return hom_limit == 0 || maps.size() < hom_limit;
        });
        Outcome o;
        o.verdict             = maps.empty() ? "None" : "Found";
        o.status              = maps.empty() ? exit_no : exit_yes;
        o.certificate["maps"] = maps;
        o.text                = std::to_string(maps.size()) + " homomorphism(s)\n";
        for (auto const& m : maps) {
          o.text += "  " + elems_str(m) + "\n";
        }
        return o;
      });
    };
  });

  // iso
  std::string iso_a, iso_b;
  auto*       iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("A", iso_a)->required();
  iso->add_option("B", iso_b)->required();
  iso->callback([&] {
    action = [&] {
      Invocation inv{"iso", {iso_a, iso_b}, json::object()};
      return run(g, inv, [&] {
        auto    m = are_isomorphic(load_algebra_or_catalog(iso_a), load_algebra_or_catalog(iso_b));
        Outcome o;
        o.verdict = m ? "Isomorphic" : "NotIsomorphic";
        o.status  = m ? exit_yes : exit_no;
        if (m) {
          o.certificate["map"] = m->map;
          o.text               = "Isomorphic via " + elems_str(m->map);
        } else {
          o.text = "NotIsomorphic";
        }
        return o;
      });
    };
  });

  // classify
  std::string cls_file;
  auto*       cls = app.add_subcommand("classify", "subdirect irreducibility and property profile");
  cls->add_option("file", cls_file)->required();
  cls->callback([&] {
    action = [&] {
      Invocation inv{"classify", {cls_file}, json::object()};
      return run(g, inv, [&] {
        Algebra A = load_algebra_or_catalog(cls_file);
        auto    c = classify(A);
        auto    p = property_profile(A);
        Outcome o;
        o.verdict = c.strictly_simple ? "StrictlySimple"
                    : c.simple        ? "Simple"
                    : c.si            ? "SI"
                    : c.fsi           ? "FSI"
                                      : "NotFSI";
        o.certificate = {{"fsi", c.fsi},
                         {"si", c.si},
                         {"simple", c.simple},
                         {"strictly_simple", c.strictly_simple},
                         {"profile", profile_json(p)}};
        if (c.monolith) {
          o.certificate["monolith"] = congruence_json(*c.monolith);
        }
        std::ostringstream os;
        os << "fsi " << c.fsi << "  si " << c.si << "  simple " << c.simple << "  strictly simple "
           << c.strictly_simple << "\n";
        if (c.monolith) {
          os << "monolith " << blocks_str(*c.monolith) << "\n";
        }
        os << "profile " << profile_json(p).dump() << "\n";
        o.text = os.str();
        return o;
      });
    };
  });

  // nsum
  std::vector<std::string> ns_files;
  std::string              ns_out;
  auto*                    ns = app.add_subcommand("nsum", "nested sum, first component outermost");
  ns->add_option("components", ns_files)->required();
  ns->add_option("-o,--output", ns_out, "write the sum to this file");
  ns->callback([&] {
    action = [&] {
      Invocation inv{"nsum", ns_files, json::object()};
      return run(g, inv, [&] {
        std::vector<Algebra> comps;
        for (auto const& f : ns_files) {
          comps.push_back(load_algebra_or_catalog(f));
        }
        auto    lay = nested_sum_layout(comps);
        Outcome o;
        o.verdict                   = "Sum";
        o.certificate["sum"]        = to_json(lay.sum);
        o.certificate["provenance"] = lay.provenance;
        if (!ns_out.empty()) {
          save_algebra(lay.sum, ns_out);
          o.text = "wrote " + ns_out;
        } else {
          o.text = serialize(lay.sum);
        }
        return o;
      });
    };
  });

  // factor
  std::string fac_file, fac_out;
  auto*       fac = app.add_subcommand("factor", "finest nested-sum decomposition of a chain");
  fac->add_option("file", fac_file)->required();
  fac->add_option("-o,--output-dir", fac_out, "write components and an assembly manifest");
  fac->callback([&] {
    action = [&] {
      Invocation inv{"factor", {fac_file}, json::object()};
      return run(g, inv, [&] {
        Algebra A     = load_algebra_or_catalog(fac_file);
        auto    comps = factor_nested_sum(A);
        Outcome o;
        o.verdict                   = comps.size() > 1 ? "Decomposed" : "Indecomposable";
        o.certificate["components"] = algebras_json(comps);
        o.text = std::to_string(comps.size()) + " component(s), outermost first\n" + algebras_text(comps);
        if (!fac_out.empty()) {
          write_numbered(fac_out, "component", comps);
          json asm_manifest;
          asm_manifest["format"] = "rlw-nsum/1";
          asm_manifest["source"] = fac_file;
          json parts             = json::array();
          for (size_t i = 0; i < comps.size(); ++i) {
            parts.push_back("component-" + std::to_string(i) + ".json");
          }
          asm_manifest["components"] = parts;
          write_file(std::filesystem::path(fac_out) / "assembly.json", asm_manifest.dump(2) + "\n");
        }
        return o;
      });
    };
  });

  // amalgamate
  std::string              am_span;
  std::vector<std::string> am_class, am_props;
  bool                     am_one = false, am_enum = false;
  auto*                    am     = app.add_subcommand("amalgamate", "search for an amalgam of a span");
  am->add_option("--span", am_span, "span file")->required();
  am->add_option("--class", am_class, "list f1 f2 ... | bounded [N]")->required()->expected(1, -1);
  am->add_option("--prop", am_props, "filter for bounded classes");
  am->add_flag("--one-sided", am_one, "second map need not be injective");
  am->add_flag("--enumerate", am_enum, "bounded classes: enumerate every chain first");
  am->callback([&] {
    action = [&] {
      Invocation inv{"amalgamate",
                     {am_span},
                     {{"class", am_class}, {"props", am_props}, {"one_sided", am_one}, {"enumerate", am_enum}}};
      if (!am_class.empty() && am_class[0] == "list") {
        inv.inputs.insert(inv.inputs.end(), am_class.begin() + 1, am_class.end());
      }
      return run(g, inv, [&] {
        Span      s = load_span(am_span);
        ClassSpec K;
        if (am_class[0] == "list") {
          std::vector<Algebra> ms;
          for (size_t i = 1; i < am_class.size(); ++i) {
            ms.push_back(load_algebra_or_catalog(am_class[i]));
          }
          K = ClassSpec::list(ms);
        } else if (am_class[0] == "bounded") {
          int n = am_class.size() > 1 ? parse_elems(am_class[1]).at(0) : env_bound();
          K     = ClassSpec::chains_up_to(n, s.B.signature(), parse_filter(am_props));
        } else {
          throw Error(ErrorKind::Usage, "--class must start with list or bounded");
        }
        auto r = am_enum ? find_amalgam_by_enumeration(s, K, am_one, g.workers)
                         : find_amalgam(s, K, am_one, g.workers);
        Outcome o;
        o.verdict     = std::string(to_string(r.verdict));
        o.status      = r.verdict == Verdict::found ? exit_yes : exit_no;
        o.certificate = amalgam_json(r);
        o.certificate["class"] = K.str();
        o.text        = "class: " + K.str() + "\n" + amalgam_text(r);
        return o;
      });
    };
  });

  // refute
  std::string rf_span;
  bool        rf_mirror = false;
  auto*       rf        = app.add_subcommand("refute", "prove that a span of chains has no chain amalgam");
  rf->add_option("--span", rf_span, "span file")->required();
  rf->add_flag("--mirror-rule", rf_mirror, "also use fixed points of d/x");
  rf->callback([&] {
    action = [&] {
      Invocation inv{"refute", {rf_span}, {{"mirror_rule", rf_mirror}}};
      return run(g, inv, [&] {
        Span    s = load_span(rf_span);
        auto    r = refute_chain_amalgam(s, rf_mirror);
        Outcome o;
        o.verdict     = std::string(to_string(r.verdict));
        o.status      = r.verdict == Verdict::refuted ? exit_no : exit_yes;
        o.certificate = amalgam_json(r);
        o.certificate["replayed"] = r.verdict == Verdict::refuted && replay_refutation(s, r);
        o.text        = amalgam_text(r);
        return o;
      });
    };
  });

  // decide-ap
  std::vector<std::string> da_gens;
  bool                     da_cross = false;
  std::string              da_fast  = "off";
  auto*                    da       = app.add_subcommand("decide-ap", "amalgamation property of a finitely generated variety");
  da->add_option("generators", da_gens)->required();
  da->add_flag("--cross-check", da_cross, "also run the essential-span route");
  da->add_option("--fast-path", da_fast, "auto: use the simple-chain shortcuts when they apply")
      ->check(CLI::IsMember({"auto", "off"}));
  da->callback([&] {
    action = [&] {
      Invocation inv{"decide-ap", da_gens, {{"cross_check", da_cross}, {"fast_path", da_fast}}};
      return run(g, inv, [&] {
        std::vector<Algebra> gens;
        for (auto const& f : da_gens) {
          gens.push_back(load_algebra_or_catalog(f));
        }
        Outcome o;
        if (da_fast == "auto" && gens.size() == 1) {
          FastPathResult fp = strictly_simple_ap(gens[0]);
          std::string    route = "strictly_simple";
          if (fp.outcome == FastPathResult::Outcome::not_applicable && gens[0].is_chain()
              && classify(gens[0]).simple) {
            fp    = simple_chain_ap(gens[0]);
            route = "simple_chain";
          }
          if (fp.outcome != FastPathResult::Outcome::not_applicable) {
            bool ap   = fp.outcome == FastPathResult::Outcome::ap;
            o.verdict = ap ? "AP" : "NotAP";
            o.status  = ap ? exit_yes : exit_no;
            o.certificate = {{"fast_path", route}, {"reason", fp.reason}};
            o.text        = o.verdict + " (fast path " + route + ": " + fp.reason + ")\n";
            if (da_cross) {
              auto d                          = decide_ap(gens, true, g.workers);
              o.certificate["full_decision"] = decision_json(d);
              o.certificate["agree"]         = d.ap == ap;
              o.text += std::string("full decision ") + (d.ap ? "AP" : "NotAP") + (d.ap == ap ? ", agrees" : ", DISAGREES") + "\n";
            }
            return o;
          }
        }
        auto d        = decide_ap(gens, da_cross, g.workers);
        o.verdict     = d.ap ? "AP" : "NotAP";
        o.status      = d.ap ? exit_yes : exit_no;
        o.certificate = decision_json(d);
        o.text        = decision_text(d);
        return o;
      });
    };
  });

  // class-check
  std::vector<std::string> cc_files;
  bool                     cc_1ap = false, cc_eap = false;
  auto*                    cc     = app.add_subcommand("class-check", "1AP or EAP of an explicit class");
  auto*                    o1     = cc->add_flag("--1ap", cc_1ap, "one-sided amalgamation property");
  cc->add_flag("--eap", cc_eap, "essential amalgamation property")->excludes(o1);
  cc->add_option("members", cc_files)->required();
  cc->callback([&] {
    action = [&] {
      Invocation inv{"class-check", cc_files, {{"property", cc_eap ? "EAP" : "1AP"}}};
      return run(g, inv, [&] {
        if (!cc_1ap && !cc_eap) {
          throw Error(ErrorKind::Usage, "give --1ap or --eap");
        }
        std::vector<Algebra> K;
        for (auto const& f : cc_files) {
          K.push_back(load_algebra_or_catalog(f));
        }
        auto    c = cc_eap ? class_has_eap(K, g.workers) : class_has_1ap(K, g.workers);
        Outcome o;
        o.verdict     = c.holds ? "Holds" : "Fails";
        o.status      = c.holds ? exit_yes : exit_no;
        o.certificate = class_check_json(c);
        o.text        = o.verdict + " (" + std::to_string(c.spans) + " spans)\n";
        if (c.witness) {
          o.text += "witness: B = member " + std::to_string(c.witness->b) + ", C = member "
                    + std::to_string(c.witness->c) + ", A = " + elems_str(c.witness->subuniverse)
                    + ", phi2 = " + elems_str(c.witness->phi2) + "\n";
        }
        return o;
      });
    };
  });

  // repro
  std::string   rp_target;
  ReproOptions  rp_opt;
  auto*         rp = app.add_subcommand("repro", "reproduce a published example end to end");
  rp->add_option("target", rp_target, "fig1 fig3 fig4 fig5 fig6 godel rsa sugihara dmm comdecomp")->required();
  rp->add_option("--seed", rp_opt.seed, "seed for randomized checks");
  rp->add_option("--bound", rp_opt.bound, "enumeration bound (default RLW_BOUND or 7)");
  rp->callback([&] {
    action = [&] {
      Invocation inv{"repro", {}, {{"target", rp_target}, {"seed", rp_opt.seed}, {"bound", rp_opt.bound}}};
      return run(g, inv, [&] {
        auto known = repro_targets();
        if (std::find(known.begin(), known.end(), rp_target) == known.end()) {
          throw Error(ErrorKind::Usage, "unknown repro target " + rp_target);
        }
        ReproOptions opt = rp_opt;
        opt.workers      = g.workers;
        return run_repro(rp_target, opt);
      });
    };
  });

  rp_opt.bound = env_bound();
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }
  return action ? action() : exit_error;
}
