// Copyright 2026 The prol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "prol/prol.hpp"
#include "suites.hpp"

using json = nlohmann::ordered_json;
using namespace prol;

namespace {

struct Opts {
  std::string ring = "int";
  long l = 3;
  int N = 4;
  int r = 0;
  int D = 3;
  int m = 1;
  std::string word, braid, index, mode = "extended", format = "json", form = "twisted";
  long p = 19, a = 1, b = 1;
  int n = 2, dmax = 4, M = 0, N1 = 1, N2 = 1, sign = 1;
  bool negate = false;
  std::string suite = "all";
  std::uint64_t seed = 2026;
};

Ring make_ring(const Opts& o) {
  if (o.ring == "int") return Ring::integers();
  if (o.ring == "mod") return Ring::mod(o.l, o.N);
  throw Error("ring must be int or mod");
}

int max_index(const std::string& text, const std::regex& re) {
  int best = 0;
  for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it)
    for (std::size_t g = 1; g < it->size(); ++g)
      if ((*it)[g].matched) best = std::max(best, std::stoi((*it)[g].str()));
  return best;
}

int word_rank(const Opts& o) {
  if (o.r > 0) return o.r;
  return std::max(1, max_index(o.word, std::regex("[xX](\\d+)")));
}

BraidWord braid_of(const Opts& o) {
  int r = o.r;
  if (r == 0) {
    r = std::max(max_index(o.braid, std::regex("[sS](\\d+)")) + 1,
                 std::max(max_index(o.braid, std::regex("A(\\d)(\\d)(?![\\d,])")),
                          max_index(o.braid, std::regex("A(\\d+),(\\d+)"))));
    r = std::max(r, 2);
  }
  return parse_braid(o.braid, r);
}

json matrix_json(const auto& m) {
  json out = json::array();
  for (const auto& row : m) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(e.str());
    out.push_back(jr);
  }
  return out;
}

json cyclo_json(const CycloInt& x) {
  json out = json::array();
  std::istringstream in(x.str().substr(1, x.str().size() - 2));
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

void emit(const json& j, const Opts& o) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) {
      std::cout << k << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
      std::cout << k << ":\n";
      for (const auto& row : v) std::cout << "  " << row.dump() << "\n";
    } else {
      std::cout << k << ": " << v.dump() << "\n";
    }
  }
}

std::string rational_str(const Rational& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

AutP pure_autp(const Opts& o) {
  BraidWord b = braid_of(o);
  if (!is_pure(b)) throw Error("braid is not pure");
  return braid_autp(b);
}

int run(const std::string& cmd, const Opts& o) {
  json j;
  if (cmd == "magnus") {
    Ring ring = make_ring(o);
    Word w = parse_word(o.word, word_rank(o));
    j["word"] = w.str();
    j["series"] = magnus(w, o.D, ring).str();
  } else if (cmd == "milnor") {
    Ring ring = make_ring(o);
    AutP g = pure_autp(o);
    MultiIndex I = parse_index(o.index);
    MilnorTable t(g, static_cast<int>(I.size()), ring, parse_delta_mode(o.mode));
    j["index"] = index_str(I);
    j["mu"] = std::stol(t.mu(I).str());
    j["delta"] = t.delta(I).str();
    j["mode"] = delta_mode_name(t.mode());
  } else if (cmd == "johnson") {
    Ring ring = make_ring(o);
    JohnsonValue v = johnson_hom(pure_autp(o), o.m, ring);
    j["m"] = o.m;
    json comps = json::array();
    for (const auto& c : v.comps) comps.push_back(c.str());
    j["tau"] = comps;
    j["trace"] = morita_trace(v).str();
  } else if (cmd == "gassner" || cmd == "gassner-red" || cmd == "burau" || cmd == "alexander") {
    Ring ring = make_ring(o);
    AutP g = pure_autp(o);
    if (cmd == "gassner") j["matrix"] = matrix_json(gassner(g, o.D, ring));
    if (cmd == "gassner-red") j["matrix"] = matrix_json(gassner_reduced(g, o.D, ring));
    if (cmd == "burau") j["matrix"] = matrix_json(burau(g, o.D, ring));
    if (cmd == "alexander") {
      AlexanderData a = alexander_matrix(g, o.D, ring);
      j["matrix"] = matrix_json(a.Q);
      j["invariant"] = a.A.str();
    }
  } else if (cmd == "braid") {
    BraidWord b = braid_of(o);
    FreeAut phi = artin(b);
    j["braid"] = b.str();
    j["strands"] = b.r();
    json im = json::array();
    for (int i = 1; i <= b.r(); ++i) im.push_back(phi.image(i).str());
    j["images"] = im;
    j["permutation"] = braid_permutation(b);
    j["pure"] = is_pure(b);
    if (is_pure(b)) {
      AutP g = braid_autp(b);
      json ys = json::array();
      for (int i = 1; i <= g.r; ++i) ys.push_back(g.longitude(i).str());
      j["longitudes"] = ys;
    }
  } else if (cmd == "jacobi") {
    ResidueField F = build_residue_field(frobenius_input(o.p, o.l, o.n), o.sign);
    CycloInt J = jacobi_sum(F, o.a, o.b, o.negate);
    j["p"] = o.p;
    j["q"] = F.q();
    j["jacobi"] = cyclo_json(J);
    j["norm_check"] = (J * J.conj()).str();
  } else if (cmd == "soule") {
    ResidueField F = build_residue_field(frobenius_input(o.p, o.l, o.n), o.sign);
    UnitForm form = o.form == "literal" ? UnitForm::literal : UnitForm::twisted;
    j["m"] = o.m;
    j["form"] = unit_form_name(form);
    j["unit"] = cyclo_json(cyclotomic_unit(o.m, o.l, o.n, form));
    j["chi"] = soule_chi(o.m, F, form);
    j["kappa"] = soule_kappa(o.m, F, form);
  } else if (cmd == "mu-table" || cmd == "soule-check") {
    FrobeniusInput fr = frobenius_input(o.p, o.l, o.n);
    MuNNTable t = mu_from_jacobi_calibrated(fr, std::max(o.dmax, o.N1 + o.N2), o.M);
    j["convention"] = t.convention.str();
    j["consistent"] = t.consistent;
    j["self_check"] = t.self_check;
    if (cmd == "mu-table") {
      json rows = json::array();
      for (const auto& [k, e] : t.entries)
        rows.push_back({{"n1", k.first}, {"n2", k.second}, {"mu", std::stol(e.value.str())}, {"precision", e.precision}});
      j["pi_precision"] = t.M;
      j["entries"] = rows;
    } else {
      ResidueField F = build_residue_field(fr, t.convention.zeta_sign);
      UnitForm form = o.form == "literal" ? UnitForm::literal : UnitForm::twisted;
      std::map<int, long> kappa;
      for (int m = 3; m <= o.N1 + o.N2; m += 2) kappa[m] = soule_kappa(m, F, form);
      SouleCheck c = soule_identity_check(t, kappa, o.N1, o.N2);
      j["lhs"] = rational_str(c.lhs);
      j["rhs"] = rational_str(c.rhs);
      j["residual"] = rational_str(c.residual);
      j["certified"] = c.certified;
      j["ok"] = c.ok;
    }
  } else if (cmd == "verify") {
    bool all = true;
    json rows = json::array();
    for (const auto& s : suites::all_suites()) {
      if (o.suite != "all" && o.suite != s.name && o.suite != std::to_string(s.id)) continue;
      suites::Result r = suites::run_suite(s, o.seed);
      all = all && r.pass;
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    j["seed"] = o.seed;
    j["suites"] = rows;
    j["pass"] = all;
    emit(j, o);
    return all ? 0 : 1;
  }
  emit(j, o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prol: Magnus expansions, Milnor invariants and Galois representations on free groups"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "int or mod")->capture_default_str();
    s->add_option("--l", o.l, "prime for the mod ring and the cyclotomic field")->capture_default_str();
    s->add_option("--N", o.N, "precision of the mod ring")->capture_default_str();
    s->add_option("--r", o.r, "rank; inferred when 0");
    s->add_option("--D", o.D, "truncation degree")->capture_default_str();
    s->add_option("--format", o.format, "json or text")->capture_default_str();
  };
  auto field = [&](CLI::App* s) {
    s->add_option("--p", o.p, "prime of the residue field")->capture_default_str();
    s->add_option("--l", o.l, "prime l")->capture_default_str();
    s->add_option("--n", o.n, "level l^n")->capture_default_str();
    s->add_option("--format", o.format, "json or text")->capture_default_str();
  };
  std::map<std::string, CLI::App*> subs;
  auto* s = app.add_subcommand("magnus", "Magnus expansion of a word");
  common(s);
  s->add_option("--word", o.word, "word such as \"[x1,x2] x3^-1\"")->required();
  subs["magnus"] = s;
  for (std::string name : {"milnor", "johnson", "gassner", "gassner-red", "burau", "alexander", "braid"}) {
    s = app.add_subcommand(name, name == "braid" ? "Artin action and longitudes" : name + " of a pure braid");
    common(s);
    s->add_option("--braid", o.braid, "braid such as \"s1^2 s2\" or \"A12 A23^-1\"")->required();
    if (name == "milnor") {
      s->add_option("--I", o.index, "multi-index such as 123")->required();
      s->add_option("--mode", o.mode, "literal, extended or classical")->capture_default_str();
    }
    if (name == "johnson") s->add_option("--m", o.m, "degree")->capture_default_str();
    subs[name] = s;
  }
  s = app.add_subcommand("jacobi", "Jacobi sum in Z[zeta]");
  field(s);
  s->add_option("--a", o.a)->capture_default_str();
  s->add_option("--b", o.b)->capture_default_str();
  s->add_option("--sign", o.sign, "+1 or -1 for the residue symbol")->capture_default_str();
  s->add_flag("--negate", o.negate, "negate the sum");
  subs["jacobi"] = s;
  s = app.add_subcommand("soule", "cyclotomic unit and Soule character");
  field(s);
  s->add_option("--m", o.m)->capture_default_str();
  s->add_option("--sign", o.sign)->capture_default_str();
  s->add_option("--form", o.form, "twisted or literal")->capture_default_str();
  subs["soule"] = s;
  s = app.add_subcommand("mu-table", "Milnor numbers recovered from Jacobi sums");
  field(s);
  s->add_option("--dmax", o.dmax)->capture_default_str();
  s->add_option("--M", o.M, "pi-adic precision; default when 0");
  subs["mu-table"] = s;
  s = app.add_subcommand("soule-check", "Soule character identity at (N1, N2)");
  field(s);
  s->add_option("--N1", o.N1)->capture_default_str();
  s->add_option("--N2", o.N2)->capture_default_str();
  s->add_option("--dmax", o.dmax)->capture_default_str();
  s->add_option("--form", o.form)->capture_default_str();
  subs["soule-check"] = s;
  s = app.add_subcommand("verify", "run the verification suites");
  s->add_option("--suite", o.suite, "suite name, id or all")->capture_default_str();
  s->add_option("--seed", o.seed)->capture_default_str();
  s->add_option("--format", o.format)->capture_default_str();
  subs["verify"] = s;

  CLI11_PARSE(app, argc, argv);
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      return run(name, o);
    } catch (const std::exception& e) {
      std::cerr << json{{"error", e.what()}}.dump() << "\n";
      return 2;
    }
  }
  return 1;
}
