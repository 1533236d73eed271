// Acceptance harness: one line per criterion, exact rational arithmetic
// throughout, exit 0 iff every criterion passes.  The CLI contract criterion
// shells out to the installed binary named by G2LAB_BIN.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2/g2maps.hpp"
#include "g2/json_io.hpp"
#include "g2/torsion.hpp"

using namespace g2;
using R = Rational;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
  if (!ok) ++failures;
}

Sampler sampler_for(const char* tag) { return Sampler(42 ^ fnv1a(tag), 9); }

// the pinned sample with entries ((2i + 3j + ij) mod 5) - 2
Endo7<R> pinned() {
  Endo7<R> a;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) a(i, j) = ((2 * i + 3 * j + i * j) % 5) - 2;
  return a;
}

// ---- criteria 1-9: in-process exact checks ---------------------------------

bool criterion1() {
  const auto& C = cayley<R>();
  bool ok = form_inner(C.phi, C.phi) == 7 && form_inner(C.star_phi, C.star_phi) == 7;
  ok = ok && wedge(C.phi, C.star_phi) == C.vol * R(7);
  Form<R> display(4);  // -sum_i e_{i+2} ^ e_{i+4} ^ e_{i+5} ^ e_{i+6}
  for (int i = 0; i < 7; ++i)
    display -= monomial<R>({(i + 2) % 7, (i + 4) % 7, (i + 5) % 7, (i + 6) % 7});
  ok = ok && hodge(C.phi) == display && C.star_phi == display;
  return ok;
}

bool criterion2() {
  auto rng = sampler_for("acc/cross");
  for (int s = 0; s < 1000; ++s) {
    auto u = rng.vec<R>(), v = rng.vec<R>(), w = rng.vec<R>();
    if (cross(u, cross(u, v)) != u * dot(u, v) - v * norm_sq(u)) return false;
    auto rhs = cross(v, cross(u, w)) * R(-1) + u * dot(v, w) + v * dot(w, u) -
               w * (R(2) * dot(u, v));
    if (cross(u, cross(v, w)) != rhs) return false;
    if (dot(cross(u, v), w) != dot(u, cross(v, w))) return false;
  }
  return true;
}

bool criterion3() {
  auto rng = sampler_for("acc/decomp");
  for (int s = 0; s < 1000; ++s) {
    auto a = rng.endo<R>();
    auto c = components(a);
    if (c.c1 + c.c2 + c.c3 + c.c4 != a) return false;
    const Endo7<R>* parts[4] = {&c.c1, &c.c2, &c.c3, &c.c4};
    R total = 0;
    for (int k = 0; k < 4; ++k) {
      total += endo_norm_sq(*parts[k]);
      for (int l = k + 1; l < 4; ++l)
        if (endo_inner(*parts[k], *parts[l]) != 0) return false;
      if (oracle_project(a, k) != *parts[k]) return false;
    }
    if (total != endo_norm_sq(a)) return false;
  }
  return true;
}

bool criterion4() {
  auto rng = sampler_for("acc/lemmas");
  for (int s = 0; s < 1000; ++s) {
    auto a = rng.endo<R>();
    auto n = component_norms_sq(a);
    auto v = invariants(a);
    R nsq = endo_norm_sq(a);
    if (v.sigma1 * v.sigma1 != R(7) * n[0]) return false;
    if (R(2) * v.sigma2 != R(6) * n[0] + n[1] - n[2] + n[3]) return false;
    // frame expansions of the cross invariants
    if (v.i0 != R(6) * n[0] + R(3) * n[1] - n[2] - R(3) * n[3]) return false;
    if (v.i1 != R(6) * n[3]) return false;
    if (v.i2 != R(-6) * n[0] + R(3) * n[1] + n[2] - R(3) * n[3]) return false;
    if (xi_norm_sq(a) != R(6) * nsq) return false;
    // relations among the invariants
    if (v.i1 != -v.i0 + nsq + R(4) * v.sigma2 - v.sigma1 * v.sigma1) return false;
    if (v.i2 != v.i0 + nsq - R(2) * v.sigma2 - v.sigma1 * v.sigma1) return false;
    if (v.i1 - v.i2 != R(-2) * v.i0 + R(6) * v.sigma2) return false;
    // norms from invariants, with the 1/7 on the sigma1^2 terms
    if (R(7) * n[0] != v.sigma1 * v.sigma1) return false;
    if (R(6) * n[1] != v.i0 + v.i1 + v.i2) return false;
    if (R(2) * n[2] != rat(12, 7) * v.sigma1 * v.sigma1 - v.i0 + v.i2) return false;
    if (R(6) * n[3] != v.i1) return false;
  }
  return true;
}

bool criterion5() {
  auto rng = sampler_for("acc/torsion");
  const auto& C = cayley<R>();
  for (int s = 0; s < 100; ++s) {
    auto t = rng.endo<R>();
    Vec7<R> frame;
    for (int i = 0; i < DIM; ++i)
      frame = frame + cross(Vec7<R>::basis(i), t.apply(Vec7<R>::basis(i)));
    if (frame != -p_map(t)) return false;
    Form<R> pd = hodge(wedge(hodge(d_phi(t)), C.phi));
    if (frame != sharp(pd) * rat(-1, 6)) return false;
    if (xi_norm_sq(t) != R(6) * endo_norm_sq(t)) return false;
    auto n = nabla_phi(t);
    if (nabla_phi_inner(n) != R(216) * endo_norm_sq(t)) return false;
    if (t_from_nabla_phi(n) != t) return false;
    auto rec = recover_torsion(d_phi(t), d_star_phi(t));
    if (!rec.consistent || rec.t != t) return false;
  }
  return true;
}

bool criterion6() {
  auto rng = sampler_for("acc/tau");
  const auto& C = cayley<R>();
  for (int s = 0; s < 100; ++s) {
    auto t = rng.endo<R>();
    auto tau = tau_forms(t);
    auto n = component_norms_sq(t);
    if (tau.tau0 * tau.tau0 != rat(144, 7) * n[0]) return false;
    if (form_norm_sq(tau.tau1) != rat(3, 2) * n[3]) return false;
    if (form_norm_sq(tau.tau2) != R(18) * n[1]) return false;
    if (form_norm_sq(tau.tau3) != R(18) * n[2]) return false;
    if (tau.tau2 != two_form_of_skew(components(t).c2) * R(6)) return false;
    if (d_phi(t) != C.star_phi * tau.tau0 + wedge(tau.tau1, C.phi) * R(3) + hodge(tau.tau3))
      return false;
    if (d_star_phi(t) != wedge(tau.tau1, C.star_phi) * R(4) + wedge(tau.tau2, C.phi))
      return false;
  }
  return true;
}

bool criterion7() {
  const auto& ref = reference_curvature_coeffs();
  bool ok = ref == std::array<R, 4>{54, -9, -9, 45};
  std::array<R, 4> base = {rat(9), rat(-3, 2), rat(-3, 2), rat(15, 2)};
  for (int k = 0; k < 4; ++k) ok = ok && ref[k] == R(6) * base[k];

  auto rng = sampler_for("acc/curvature");
  for (int s = 0; s < 100 && ok; ++s) {
    auto t = rng.endo<R>();
    R want = curvature_reference(t);
    ok = ok && curvature_bryant(t) == want && curvature_bhl(t) == want &&
         curvature_niedzialomski(t) == want;
  }
  auto reports = compare_formulas(pinned(), 42);
  for (const char* name : {"bryant", "bhl", "niedzialomski"}) {
    const auto& rep = reports.at(name);
    ok = ok && rep.in_span && rep.matches_reference;
    for (int k = 0; k < 4; ++k) ok = ok && rep.residual[k] == 0;
  }
  return ok;
}

bool criterion8(std::string& extra) {
  auto rng = sampler_for("acc/skew");
  for (int s = 0; s < 100; ++s) {
    auto a = rng.endo<R>();
    auto c = components(a);
    auto t = c.c1 + c.c3 + c.c4;  // T with vanishing g2 component
    auto n = component_norms_sq(t);
    auto T = skew_torsion(t);
    if (form_norm_sq(T) != R(4) * n[0] + R(18) * n[2] + R(6) * n[3]) return false;
    if (tensor_inner(T, T) != R(6) * form_norm_sq(T)) return false;
  }
  auto fi = compare_formulas(pinned(), 42).at("fi");
  std::array<R, 4> want = {0, 9, 0, -24};
  for (int k = 0; k < 4; ++k)
    if (fi.residual[k] != want[k]) return false;
  extra = "; FI residual (0, 9, 0, -24) on (n1, n2, n3, n4), informational";
  return true;
}

bool criterion9() {
  const auto& C = cayley<R>();
  auto id = Endo7<R>::identity();
  if (map_i(id) != C.phi * R(3)) return false;
  if (map_j<R>(C.phi) != id * R(-6)) return false;
  if (map_j<R>(map_i(id)) != id * R(-18)) return false;

  auto rng = sampler_for("acc/maps");
  for (int s = 0; s < 100; ++s) {
    auto a = sym(rng.endo<R>());
    auto g = rng.form<R>(3);
    g -= split_3form(g).part7;
    auto res = composition_residuals(a, g, true);
    if (!(res.j_after_i == Endo7<R>{}) || !(res.i_after_j == Form<R>(3))) return false;
    if (!(res.j_after_star_k == Endo7<R>{}) || !(res.k_after_j == Form<R>(4))) return false;

    auto any = rng.endo<R>();
    auto [b1, b2] = bridge_residuals(any);
    if (!(b1 == Form<R>(4)) || !(b2 == Form<R>(3))) return false;
    auto [r1, r2] = vector_identity_residuals(rng.vec<R>(), rng.vec<R>());
    if (!(r1 == Form<R>(3)) || !(r2 == Form<R>(4))) return false;

    auto c = components(any);
    auto dp = split_4form(d_phi(any));
    if (dp.part1 != map_k(c.c1) * R(3)) return false;
    if (dp.part27 != map_k(c.c3) * R(3)) return false;
    if (dp.part7 != map_k(c.c4) * R(-3)) return false;
    if (map_k(c.c2) != Form<R>(4)) return false;
    auto ds = split_5form(d_star_phi(any));
    if (ds.part14 != map_m(c.c2) * R(3)) return false;
    if (ds.part7 != map_m(c.c4) * R(-6)) return false;
  }
  return true;
}

// ---- criterion 10: the CLI contract ----------------------------------------

struct RunOutput {
  int status = -1;
  std::string out;
};

RunOutput run_cli(const std::string& bin, const std::string& args) {
  RunOutput r;
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool criterion10(std::string& what) {
  const char* bin = std::getenv("G2LAB_BIN");
  if (!bin || !*bin) {
    what = "CLI contract (set G2LAB_BIN to the g2lab binary)";
    return false;
  }
  what = "verify exits 0 with every check passing, output is byte-deterministic, "
         "float mode reproduces the exact pass set at 1e-9";

  auto full = run_cli(bin, "verify");
  if (full.status != 0) return false;
  nlohmann::json rep = nlohmann::json::parse(full.out, nullptr, false);
  if (rep.is_discarded() || !rep["summary"]["all_pass"].get<bool>()) return false;

  auto a1 = run_cli(bin, "verify --samples 120");
  auto a2 = run_cli(bin, "verify --samples 120");
  if (a1.status != 0 || a1.out != a2.out || a1.out.empty()) return false;

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "g2lab-acceptance";
  fs::create_directories(dir);
  fs::path input = dir / "sample.json";
  {
    std::ofstream f(input);
    f << endo_to_json(pinned()).dump() << "\n";
  }
  auto d1 = run_cli(bin, "derive " + input.string());
  auto d2 = run_cli(bin, "derive " + input.string());
  if (d1.status != 0 || d1.out != d2.out || d1.out.empty()) return false;

  // a derived pair must recover its tensor exactly, and an unrealizable pair
  // must be refused with status 3
  nlohmann::json derived = nlohmann::json::parse(d1.out);
  fs::path pair = dir / "pair.json";
  {
    std::ofstream f(pair);
    f << nlohmann::json{{"d_phi", derived["d_phi"]},
                        {"d_star_phi", derived["d_star_phi"]}}
             .dump()
      << "\n";
  }
  auto rec = run_cli(bin, "recover " + pair.string());
  if (rec.status != 0) return false;
  nlohmann::json recovered = nlohmann::json::parse(rec.out);
  if (endo_from_json<R>(recovered["T"], "T") != pinned()) return false;

  {
    std::ofstream f(pair);
    f << nlohmann::json{{"d_phi", derived["d_phi"]},
                        {"d_star_phi", {{"degree", 5}, {"coeffs", nlohmann::json::object()}}}}
             .dump()
      << "\n";
  }
  if (run_cli(bin, "recover " + pair.string()).status != 3) return false;
  if (run_cli(bin, "decompose /nonexistent.json").status != 2) return false;
  fs::remove_all(dir);

  auto ex = run_cli(bin, "verify --samples 150");
  auto fl = run_cli(bin, "verify --samples 150 --mode float");
  if (ex.status != 0 || fl.status != 0) return false;
  nlohmann::json je = nlohmann::json::parse(ex.out), jf = nlohmann::json::parse(fl.out);
  if (je["checks"].size() != jf["checks"].size()) return false;
  for (size_t i = 0; i < je["checks"].size(); ++i) {
    if (je["checks"][i]["id"] != jf["checks"][i]["id"]) return false;
    if (je["checks"][i]["pass"] != jf["checks"][i]["pass"]) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, criterion1(),
         "structural constants (phi,phi) = (*phi,*phi) = 7, phi ^ *phi = 7 Vol, "
         "*phi matches its displayed expansion");
  report(2, criterion2(),
         "cross-product expansions and the pairing symmetry, 1000 rational triples");
  report(3, criterion3(),
         "decomposition reconstructs, is orthogonal, satisfies pythagoras, and agrees "
         "with the least-squares projectors on 1000 integer matrices");
  report(4, criterion4(),
         "invariant lemma network including norms-from-invariants with the 1/7 scaling, "
         "1000 matrices per identity");
  report(5, criterion5(),
         "torsion model: frame traces, norm ratios 6 and 216, and both recovery round "
         "trips on 100 tensors");
  report(6, criterion6(),
         "tau forms: norms (144/7, 3/2, 18, 18), tau2 = 6 T2_flat, and both "
         "reconstruction displays on 100 tensors");
  report(7, criterion7(),
         "curvature coefficients: reference (54, -9, -9, 45) = 6 x (9, -3/2, -3/2, 15/2); "
         "the tau-basis and xi-basis formulas resolve to zero residual");
  {
    std::string extra;
    bool ok = criterion8(extra);
    report(8, ok,
           "skew torsion norm 4 n1 + 18 n3 + 6 n4 and tensor scaling on the vanishing-n2 "
           "slice" + (ok ? extra : std::string()));
  }
  report(9, criterion9(),
         "section-6 maps: spot values, restricted compositions, bridges, vector "
         "identities, and derivative conversions 3k / -3k / 3m / -6m by slot");
  {
    std::string what;
    bool ok = criterion10(what);
    report(10, ok, what);
  }
  std::cout << (failures == 0 ? "acceptance: all 10 criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
