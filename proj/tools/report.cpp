#include <openssl/evp.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rlw/catalog.hpp"

namespace rlw::cli {

  std::string sha256_hex(std::string const& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    static char const hex[] = "0123456789abcdef";
    std::string       out;
    for (unsigned i = 0; i < len; ++i) {
      out += hex[digest[i] >> 4];
      out += hex[digest[i] & 15];
    }
    return out;
  }

  json input_entry(std::string const& ref) {
    json j;
    j["ref"] = ref;
    if (std::filesystem::is_regular_file(ref)) {
      j["sha256"] = sha256_hex(read_file(ref));
    } else {
      j["sha256"] = sha256_hex(serialize(resolve_catalog(ref)));
    }
    return j;
  }

  json run_manifest(Invocation const& inv, Outcome const& out, double seconds) {
    json m;
    m["format"]  = "rlw-run/1";
    m["command"] = inv.command;
    json inputs  = json::array();
    for (auto const& ref : inv.inputs) {
      inputs.push_back(input_entry(ref));
    }
    m["inputs"]       = inputs;
    m["parameters"]   = inv.parameters;
    m["verdict"]      = out.verdict;
    m["exit_status"]  = out.status;
    m["certificate"]  = out.certificate;
    m["wall_seconds"] = seconds;
    return m;
  }

  json elems_json(std::vector<Elem> const& v) {
    return json(v);
  }

  json congruence_json(Congruence const& c) {
    return json(c.blocks());
  }

  json cep_json(CepReport const& r) {
    json j;
    j["holds"] = r.holds;
    if (!r.holds) {
      j["subuniverse"] = r.subuniverse;
      // theta translated back to elements of A
      std::vector<std::vector<Elem>> blocks;
      for (auto const& b : r.theta.blocks()) {
        std::vector<Elem> bb;
        for (Elem x : b) {
          bb.push_back(r.subuniverse[x]);
        }
        blocks.push_back(bb);
      }
      j["theta"] = blocks;
      if (r.generator) {
        j["generator"] = {r.generator->first, r.generator->second};
      }
      j["extension"] = congruence_json(r.extension);
    }
    return j;
  }

  json span_json(Span const& s) {
    json j;
    j["A"]    = to_json(s.A);
    j["B"]    = to_json(s.B);
    j["C"]    = to_json(s.C);
    j["phi1"] = s.phi1;
    j["phi2"] = s.phi2;
    return j;
  }

  json amalgam_json(AmalgamReport const& r) {
    json j;
    j["verdict"] = std::string(to_string(r.verdict));
    if (r.bound) {
      j["bound"] = *r.bound;
    }
    j["candidates"] = r.candidates;
    if (r.D) {
      j["D"]    = to_json(*r.D);
      j["psi1"] = r.psi1;
      j["psi2"] = r.psi2;
    }
    if (r.verdict == Verdict::refuted || r.verdict == Verdict::unknown) {
      json trace = json::array();
      for (auto const& st : r.trace) {
        trace.push_back(st.str());
      }
      j["trace"]       = trace;
      j["steps_total"] = r.steps_total;
      if (r.contradiction) {
        j["contradiction"] = r.contradiction->str();
      }
    }
    return j;
  }

  json class_check_json(ClassCheck const& c) {
    json j;
    j["holds"] = c.holds;
    j["spans"] = c.spans;
    if (c.witness) {
      j["witness"] = {{"b", c.witness->b},
                      {"c", c.witness->c},
                      {"subuniverse", c.witness->subuniverse},
                      {"phi2", c.witness->phi2}};
    }
    if (c.witness_span) {
      j["witness_span"] = span_json(*c.witness_span);
    }
    return j;
  }

  json decision_json(ApDecision const& d) {
    json j;
    j["ap"]     = d.ap;
    j["reason"] = d.reason == ApDecision::Reason::none          ? "none"
                  : d.reason == ApDecision::Reason::cep_failure ? "CEPFailure"
                                                                : "SpanFailure";
    json chains = json::array();
    for (auto const& C : d.chains) {
      chains.push_back(to_json(C));
    }
    j["fsi_chains"] = chains;
    if (d.cep_chain) {
      j["cep_chain"] = *d.cep_chain;
      j["cep"]       = cep_json(*d.cep);
    }
    if (d.check) {
      j["one_sided_check"] = class_check_json(*d.check);
    }
    if (d.essential_check) {
      j["essential_check"] = class_check_json(*d.essential_check);
    }
    if (d.routes_agree) {
      j["routes_agree"] = *d.routes_agree;
    }
    return j;
  }

  std::string elems_str(std::vector<Elem> const& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "]";
  }

  std::string blocks_str(Congruence const& c) {
    std::string s;
    for (auto const& b : c.blocks()) {
      s += "{";
      for (size_t i = 0; i < b.size(); ++i) {
        s += (i ? "," : "") + std::to_string(b[i]);
      }
      s += "}";
    }
    return s;
  }

  std::string amalgam_text(AmalgamReport const& r) {
    std::ostringstream os;
    os << to_string(r.verdict);
    if (r.bound) {
      os << " (bound " << *r.bound << ", " << r.candidates << " placements tried)";
    }
    os << "\n";
    if (r.D) {
      os << "D: " << serialize(*r.D);
      os << "psi1: " << elems_str(r.psi1) << "\npsi2: " << elems_str(r.psi2) << "\n";
    }
    if (!r.trace.empty() || r.contradiction) {
      for (auto const& st : r.trace) {
        os << "  " << st.str() << "\n";
      }
      if (r.contradiction) {
        os << "  " << r.contradiction->str() << "\n";
      }
      os << "(" << r.trace.size() << " of " << r.steps_total << " derived steps shown)\n";
    }
    return os.str();
  }

  std::string decision_text(ApDecision const& d) {
    std::ostringstream os;
    os << (d.ap ? "AP" : "NotAP");
    if (d.reason == ApDecision::Reason::cep_failure) {
      os << " (CEP fails in fsi chain " << *d.cep_chain << ")";
    } else if (d.reason == ApDecision::Reason::span_failure) {
      os << " (span without a one-sided amalgam)";
    }
    os << "\nfsi chains:";
    for (auto const& C : d.chains) {
      os << " " << C.name();
    }
    os << "\n";
    if (d.cep) {
      auto const& c = *d.cep;
      os << "CEP witness: subuniverse " << elems_str(c.subuniverse) << ", theta " << blocks_str(c.theta)
         << " (coded in the subalgebra), extension " << blocks_str(c.extension) << "\n";
    }
    if (d.check && d.check->witness_span) {
      auto const& w = *d.check->witness_span;
      os << "witness span: A = " << w.A.name() << " (" << w.A.size() << "), B = " << w.B.name() << " ("
         << w.B.size() << "), C = " << w.C.name() << " (" << w.C.size() << "), phi1 = " << elems_str(w.phi1)
         << ", phi2 = " << elems_str(w.phi2) << "\n";
    }
    if (d.routes_agree) {
      os << "essential-span route " << (*d.routes_agree ? "agrees" : "DISAGREES") << "\n";
    }
    return os.str();
  }

}  // namespace rlw::cli
