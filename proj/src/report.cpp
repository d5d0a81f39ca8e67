#include "fibrecheck/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

#include "fibrecheck/parser.hpp"

namespace fibrecheck {

#ifndef FIBRECHECK_VERSION
#define FIBRECHECK_VERSION "0.0.0"
#endif

std::string version_string() { return FIBRECHECK_VERSION; }

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i == 0 ? "" : " ") + names[i];
  return out.empty() ? "(none)" : out;
}

std::string render_vector(const std::vector<Polynomial>& v) {
  auto n = content_normalized(v);
  if (n.size() == 1) return n[0].to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i == 0 ? "" : "; ") + n[i].to_string();
  return out + ")";
}

std::string base_ring_name(const Problem& p) {
  std::string out = p.field.is_rationals() ? "Q[" : "F_" + p.field.to_string().substr(2) + "[";
  for (std::size_t i = 0; i < p.base_vars.size(); ++i) out += (i == 0 ? "" : ", ") + p.base_vars[i];
  return out + "]";
}

long long rounded_millis(const PowerStats& s, bool trace) {
  return trace ? static_cast<long long>(std::llround(s.millis)) : 0;
}

void text_verdict(std::ostringstream& out, const Report& report, const Verdict& v) {
  const bool open = v.kind == CheckKind::Open;
  const std::string what = open ? "fibred power" : "tensor power";
  const std::size_t n = report.problem.base_vars.size();
  out << (open ? "Openness: " : "Flatness: ");
  switch (v.outcome) {
    case Outcome::Fail:
      if (open) {
        out << "NOT OPEN (vertical component at fibred power " << *v.failing_power << ")\n";
        out << "  witness g = " << render_normalized(*v.witness_g) << "\n";
        out << "  witness r = " << render_normalized(*v.witness_r) << "\n";
        out << "  The " << *v.failing_power
            << "-fold fibred power has an irreducible component lying over the proper closed "
               "subset V(r) of the base: r*g is in the radical of J_"
            << *v.failing_power << " while g is not, so the map is not open.\n";
      } else {
        out << "NOT FLAT (torsion at tensor power " << *v.failing_power << ")\n";
        out << "  certificate r = " << render_normalized(v.certificate->r) << "\n";
        out << "  certificate v = " << render_vector(v.certificate->v) << "\n";
        out << "  The " << *v.failing_power << "-fold tensor power over " << base_ring_name(report.problem)
            << " has a nonzero element v killed by the nonzero base element r, so it is not "
               "torsion-free and the module is not flat.\n";
      }
      break;
    case Outcome::Pass:
      out << (open ? "OPEN" : "FLAT") << " (no " << (open ? "vertical component" : "torsion")
          << " up to " << what << " " << v.target_power << ")\n";
      out << "  Every " << what << " up to " << v.target_power << " was checked, reaching dim "
          << base_ring_name(report.problem) << " = " << n << ", which settles "
          << (open ? "openness" : "flatness") << ".\n";
      break;
    case Outcome::InconclusivePass:
      out << "INCONCLUSIVE (no " << (open ? "vertical component" : "torsion") << " up to " << what
          << " " << v.target_power << ", below n = " << n << ")\n";
      out << "  The criterion needs every " << what << " up to n = " << n << "; only "
          << v.target_power << " were examined.\n";
      break;
    case Outcome::Aborted:
      out << "ABORTED at " << what << " " << v.power_reached << " (" << v.abort_limit << ")\n";
      out << "  " << v.abort_message << "\n";
      break;
  }
  if (report.trace) {
    for (const auto& s : v.powers) {
      out << "  power " << s.k << ": basis " << s.basis_size << ", pairs " << s.pairs << ", "
          << s.millis << " ms\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  const auto& p = report.problem;
  out << "fibrecheck " << version_string() << "\n";
  out << "base " << base_ring_name(p) << " (n = " << p.base_vars.size() << "), fibre variables "
      << join(p.fibre_vars) << " (m = " << p.fibre_vars.size() << "), order "
      << to_string(report.order) << "\n\n";
  for (const auto& v : report.verdicts) text_verdict(out, report, v);
  return out.str();
}

std::string render_json(const Report& report) {
  using nlohmann::ordered_json;
  const auto& p = report.problem;
  ordered_json doc;
  doc["version"] = version_string();
  doc["field"] = p.field.to_string();
  doc["n"] = p.base_vars.size();
  doc["m"] = p.fibre_vars.size();
  doc["order"] = to_string(report.order);
  doc["problem"] = render_problem(p);
  ordered_json checks = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json c;
    c["kind"] = to_string(v.kind);
    c["outcome"] = to_string(v.outcome);
    c["target_power"] = v.target_power;
    if (v.failing_power) c["failing_power"] = *v.failing_power;
    if (v.witness_g) c["witness_g"] = render_normalized(*v.witness_g);
    if (v.witness_r) c["witness_r"] = render_normalized(*v.witness_r);
    if (v.certificate) {
      c["certificate_r"] = render_normalized(v.certificate->r);
      ordered_json comps = ordered_json::array();
      for (const auto& q : content_normalized(v.certificate->v)) comps.push_back(q.to_string());
      c["certificate_v"] = comps;
    }
    if (v.outcome == Outcome::Aborted) {
      c["abort"] = {{"limit", v.abort_limit}, {"power", v.power_reached}, {"message", v.abort_message}};
    }
    ordered_json powers = ordered_json::array();
    for (const auto& s : v.powers) {
      powers.push_back({{"k", s.k},
                        {"basis_size", s.basis_size},
                        {"pairs", s.pairs},
                        {"millis", rounded_millis(s, report.trace)}});
    }
    c["powers"] = powers;
    checks.push_back(c);
  }
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace fibrecheck
