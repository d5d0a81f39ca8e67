// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace fibrecheck;
using namespace fibrecheck::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome_ {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + ("violated: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return millis_since(t0);
}

// Membership of a pure-base polynomial in (y1, ..., yn): vanishes at the origin.
bool in_base_maximal_ideal(const Polynomial& r) {
  for (const auto& t : r.terms()) {
    if (t.mono.is_one()) return false;
  }
  return true;
}

bool valid_open_witness(const Problem& p, const Verdict& v) {
  if (v.outcome != Outcome::Fail || !v.witness_g || !v.witness_r) return false;
  auto J = fibred_power_ideal(Ideal(p.ring(), p.ideal), *v.failing_power);
  return !v.witness_r->is_zero() && radical_member(*v.witness_r * *v.witness_g, J) &&
         !radical_member(*v.witness_g, J);
}

bool valid_flat_certificate(const Problem& p, const Verdict& v) {
  if (v.outcome != Outcome::Fail || !v.certificate) return false;
  auto N = tensor_power_presentation(p, *v.failing_power);
  ModuleVector vec(N.ring(), v.certificate->v);
  return !v.certificate->r.is_zero() && !N.contains(vec) &&
         N.contains(vec.times(v.certificate->r.in_ring(N.ring())));
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

Outcome_ criterion1() {
  Outcome_ o;
  auto p = fixture("blowup");
  Verdict v;
  double ms = timed([&] { v = check_openness(p); });
  o.require(v.outcome == Outcome::Fail && v.failing_power == 2, "fail at power 2 (power 1 passes)");
  o.require(v.powers.size() == 2, "power 1 examined before power 2");
  o.require(valid_open_witness(p, v), "r*g in rad J_2 and g not in rad J_2");
  o.require(v.witness_r && in_base_maximal_ideal(*v.witness_r), "r in (y1, y2) minus 0");
  auto J2 = fibred_power_ideal(Ideal(p.ring(), p.ideal), 2);
  auto r2 = J2.ring();
  auto meet = intersect(ideal(r2, {"y1", "y2"}), ideal(r2, {"y1*x[1] - y2", "x[1] - x[2]"}));
  o.require(J2.contains(meet) && meet.contains(J2), "J_2 = (y1, y2) meet (y1*x[1] - y2, x[1] - x[2])");
  o.require(ms < 1000, "runtime < 1 s");
  if (v.witness_g && v.witness_r) {
    o.note("g = " + render_normalized(*v.witness_g) + ", r = " + render_normalized(*v.witness_r));
  }
  o.note(fmt_ms(ms) + " < 1000 ms");
  return o;
}

Outcome_ criterion2() {
  Outcome_ o;
  auto p = fixture("blowup");
  Verdict v;
  double ms = timed([&] { v = check_flatness(p); });
  o.require(v.outcome == Outcome::Fail && v.failing_power == 2, "fail at power 2 (power 1 passes)");
  o.require(!has_torsion(Ideal(p.ring(), p.ideal)).found, "power 1 torsion-free");
  o.require(valid_flat_certificate(p, v), "r*v in J_2 and v not in J_2");
  o.require(ms < 1000, "runtime < 1 s");
  if (v.certificate) {
    auto r = render_normalized(v.certificate->r);
    auto vv = render_normalized(v.certificate->v.at(0));
    o.note("r = " + r + ", v = " + vv + (r == "y1" && vv == "x[1] - x[2]" ? " (as expected)" : ""));
  }
  o.note(fmt_ms(ms) + " < 1000 ms");
  return o;
}

Outcome_ criterion3() {
  Outcome_ o;
  auto p = fixture("cusp");
  Verdict open, flat;
  double ms = timed([&] {
    open = check_openness(p);
    flat = check_flatness(p);
  });
  o.require(open.outcome == Outcome::Fail && open.failing_power == 1, "open fail at power 1");
  o.require(flat.outcome == Outcome::Fail && flat.failing_power == 1, "flat fail at power 1");
  o.require(valid_open_witness(p, open), "open witness valid");
  o.require(valid_flat_certificate(p, flat), "flat certificate valid");
  o.require(open.witness_r && render_normalized(*open.witness_r) == "y1^3 - y2^2",
            "open witness r = y1^3 - y2^2");
  if (flat.certificate) {
    auto r = flat.certificate->r;
    auto curve = Ideal(r.ring(), {parse_polynomial(r.ring(), "y1^3 - y2^2")});
    o.require(curve.contains(r), "flat r in (y1^3 - y2^2)");
    o.note("flat r = " + render_normalized(r));
  }
  o.require(ms < 1000, "runtime < 1 s");
  o.note(fmt_ms(ms) + " < 1000 ms");
  return o;
}

Outcome_ criterion4() {
  Outcome_ o;
  for (const auto& name : {"double_cover", "open_immersion", "zero_ideal"}) {
    auto p = fixture(name);
    Verdict open, flat;
    double ms = timed([&] {
      open = check_openness(p);
      flat = check_flatness(p);
    });
    o.require(open.outcome == Outcome::Pass, std::string(name) + " open pass");
    o.require(flat.outcome == Outcome::Pass, std::string(name) + " flat pass");
    o.require(ms < 1000, std::string(name) + " runtime < 1 s");
    o.note(std::string(name) + " " + fmt_ms(ms));
  }
  // The free fibre passes beyond dim R as well.
  CheckOptions beyond;
  beyond.max_power = 3;
  auto p = fixture("zero_ideal");
  o.require(check_openness(p, beyond).outcome == Outcome::Pass &&
                check_flatness(p, beyond).outcome == Outcome::Pass,
            "I = (0) passes at powers 1..3");
  return o;
}

Outcome_ criterion5() {
  Outcome_ o;
  auto p = fixture("vertical_lines");
  Verdict v;
  double ms = timed([&] { v = check_openness(p); });
  o.require(v.outcome == Outcome::Fail && v.failing_power == 1, "open fail at power 1");
  o.require(valid_open_witness(p, v), "witness valid");
  o.require(v.witness_r && in_base_maximal_ideal(*v.witness_r), "r in (y1, y2) minus 0");
  if (v.witness_r) o.note("r = " + render_normalized(*v.witness_r));
  o.note(fmt_ms(ms));
  return o;
}

Outcome_ criterion6() {
  Outcome_ o;
  std::vector<Problem> corpus;
  for (const auto& name : fixture_names()) corpus.push_back(fixture(name));
  auto random = random_corpus(2024, 16);
  corpus.insert(corpus.end(), random.begin(), random.end());
  std::size_t bases = 0, saturations = 0, verdicts = 0;
  int violations = 0;
  auto check = [&](bool cond, const std::string& what, const Problem& p) {
    if (!cond) {
      ++violations;
      o.require(false, what + " on\n" + render_problem(p));
    }
  };
  for (const auto& p : corpus) {
    int n = static_cast<int>(p.base_vars.size());
    for (auto kind : {WithinBlock::Grevlex, WithinBlock::Lex}) {
      Ideal I(p.ring(kind), p.ideal);
      for (int k = 1; k <= n; ++k) {
        auto J = fibred_power_ideal(I, k);
        check(satisfies_buchberger_criterion(J.basis()), "(a) S-pair criterion", p);
        ++bases;
        auto h = generic_denominator(J.basis(), J.ring());
        auto s = saturate(J, h);
        check(same_ideal(saturate(s, h), s), "(b) saturation idempotence", p);
        Ideal chain = J;
        for (int i = 0; i < 20; ++i) {
          Ideal next = quotient(chain, h);
          if (chain.contains(next)) break;
          chain = next;
        }
        check(same_ideal(chain, s), "(b) quotient-chain agreement", p);
        ++saturations;
      }
    }
    CheckOptions grevlex, lex;
    lex.order = WithinBlock::Lex;
    grevlex.allow_char_p_flatness = lex.allow_char_p_flatness = true;
    auto open = check_openness(p, grevlex), open_lex = check_openness(p, lex);
    auto flat = check_flatness(p, grevlex), flat_lex = check_flatness(p, lex);
    verdicts += 4;
    if (flat.outcome == Outcome::Pass) check(open.outcome == Outcome::Pass, "(c) flat => open", p);
    check(open.outcome == open_lex.outcome && open.failing_power == open_lex.failing_power,
          "(d) openness order invariance", p);
    check(flat.outcome == flat_lex.outcome && flat.failing_power == flat_lex.failing_power,
          "(d) flatness order invariance", p);
    for (const auto* v : {&open, &open_lex}) {
      if (v->outcome == Outcome::Fail) check(valid_open_witness(p, *v), "(e) open witness", p);
    }
    for (const auto* v : {&flat, &flat_lex}) {
      if (v->outcome == Outcome::Fail) check(valid_flat_certificate(p, *v), "(e) flat certificate", p);
    }
  }
  o.note(std::to_string(corpus.size()) + " inputs, " + std::to_string(bases) + " bases, " +
         std::to_string(saturations) + " saturations, " + std::to_string(verdicts) +
         " verdicts, " + std::to_string(violations) + " violations");
  o.require(corpus.size() >= 10, "corpus of at least 10 inputs");
  return o;
}

Outcome_ criterion7() {
  Outcome_ o;
  auto p = fixture("blowup");
  Ideal I(p.ring(), p.ideal);
  int d = krull_dim(I).dim;
  int f00 = fibre_dim(I, {0, 0}).dim;
  int f11 = fibre_dim(I, {1, 1}).dim;
  o.require(d == 2, "krull_dim = 2");
  o.require(f00 == 1, "fibre_dim at (0,0) = 1");
  o.require(f11 == 0, "fibre_dim at (1,1) = 0");
  o.require(d == static_cast<int>(p.base_vars.size()) + f11, "Nagata 2 = 2 + 0");
  o.require(f00 >= f11, "fibre_dim(0,0) >= fibre_dim(1,1)");
  o.note("dim A = " + std::to_string(d) + ", fibre dims " + std::to_string(f00) + " and " +
         std::to_string(f11));
  return o;
}

Outcome_ criterion8() {
  Outcome_ o;
  auto run = [](std::vector<std::string> args, const std::string& in_text = "") {
    std::istringstream in(in_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return std::pair<int, std::string>{code, out.str()};
  };
  std::size_t identical = 0;
  for (const auto& name : fixture_names()) {
    std::vector<std::string> args = {"--input", fixture_path(name + ".alg"), "--json",
                                     "--allow-char-p-flatness"};
    auto a = run(args), b = run(args);
    o.require(a.first == 0, name + " exit 0");
    if (a.second == b.second && !a.second.empty()) {
      ++identical;
    } else {
      o.require(false, name + " byte-identical JSON");
    }
  }
  o.note(std::to_string(identical) + "/" + std::to_string(fixture_names().size()) +
         " fixtures byte-identical");
  struct Case {
    std::string file;
    int expected;
  };
  for (const auto& c : std::vector<Case>{{"blowup.alg", 0},
                                         {"malformed.alg", 1},
                                         {"large_prime.alg", 2},
                                         {"oversized.alg", 3}}) {
    int code = run({"--input", fixture_path(c.file)}).first;
    o.require(code == c.expected, c.file + " exit " + std::to_string(c.expected));
  }
  o.require(run({"--input", fixture_path("blowup.alg"), "--pair-limit", "1"}).first == 3,
            "pair-limit abort exit 3");
  o.note("exit codes 0/1/2/3 exercised");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome_()> run;
  };
  std::vector<Entry> entries = {
      {1, "blow-up openness sharpness", criterion1},
      {2, "blow-up flatness", criterion2},
      {3, "cusp", criterion3},
      {4, "positive verdicts", criterion4},
      {5, "vertical-at-power-1 union", criterion5},
      {6, "property suite", criterion6},
      {7, "dimension diagnostics", criterion7},
      {8, "CLI conformance", criterion8},
  };
  int failed = 0;
  auto t0 = Clock::now();
  for (const auto& e : entries) {
    Outcome_ o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    failed += o.ok ? 0 : 1;
    std::cout << "criterion " << e.id << " (" << e.name << "): " << (o.ok ? "PASS" : "FAIL")
              << " [" << o.detail << "]" << std::endl;
  }
  double total = millis_since(t0);
  bool in_budget = total < 60000;
  std::cout << "total " << fmt_ms(total) << (in_budget ? " (< 60 s)" : " (over the 60 s budget)")
            << "; " << (entries.size() - failed) << "/" << entries.size() << " criteria passed"
            << std::endl;
  return failed == 0 && in_budget ? 0 : 1;
}
