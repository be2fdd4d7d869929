#include "dnt/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dnt {

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  std::string s{buf};
  // never print a signed zero
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
    s.erase(0, 1);
  }
  return s;
}

std::string focal_name(const LabelSet& domain, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : domain.labels_of(mask)) {
    if (!first) {
      out += ",";
    }
    out += l;
    first = false;
  }
  return out + "}";
}

std::string ranking_line(const Ranking& ranking) {
  std::string out;
  for (std::size_t i = 0; i < ranking.order.size(); ++i) {
    if (i) {
      out += " > ";
    }
    out += ranking.order[i].candidate;
  }
  return out;
}

void check_stage(const std::optional<std::string>& stage) {
  if (!stage) {
    return;
  }
  const auto& names = report_stage_names();
  if (std::find(names.begin(), names.end(), *stage) == names.end()) {
    throw std::invalid_argument("unknown report stage \"" + *stage + "\"");
  }
}

}  // namespace

const std::vector<std::string>& report_stage_names() {
  static const std::vector<std::string> names{"aggregation", "d-numbers",
                                              "fusion", "lvt", "decision"};
  return names;
}

std::string render_report(const DecisionProblem& p, const PipelineTrace& t,
                          const ReportOptions& options) {
  check_stage(options.stage);
  const int prec = options.precision;
  auto wants = [&](std::string_view name) {
    return !options.stage || *options.stage == name;
  };
  std::ostringstream out;

  if (wants("aggregation")) {
    out << "== aggregation ==\n";
    out << "criterion\tcandidate\ta\tb\tc\n";
    for (std::size_t c = 0; c < p.criteria().size(); ++c) {
      for (std::size_t a = 0; a < p.candidates().size(); ++a) {
        const auto& x = t.aggregated[c][a];
        out << p.criteria()[c] << "\t" << p.candidates()[a] << "\t"
            << fixed(x.a(), prec) << "\t" << fixed(x.b(), prec) << "\t"
            << fixed(x.c(), prec) << "\n";
      }
    }
    out << "\n";
  }

  auto render_dnumber = [&](const DNumber& d, const std::string& prefix) {
    for (const auto& [mask, value] : d.masses()) {
      out << prefix << focal_name(d.domain(), mask) << "\t" << fixed(value, prec)
          << "\n";
    }
    if (d.theta_mass() > 0.0) {
      out << prefix << "theta\t" << fixed(d.theta_mass(), prec) << "\n";
    }
  };

  if (wants("d-numbers")) {
    out << "== d-numbers ==\n";
    out << "criterion\tcandidate\tfocal\tmass\n";
    for (std::size_t c = 0; c < p.criteria().size(); ++c) {
      for (std::size_t a = 0; a < p.candidates().size(); ++a) {
        render_dnumber(t.per_criterion[c][a],
                       p.criteria()[c] + "\t" + p.candidates()[a] + "\t");
      }
    }
    out << "\n";
  }

  if (wants("fusion")) {
    out << "== fusion ==\n";
    out << "epsilon\t" << fixed(t.epsilon, prec) << "\n";
    out << "candidate\tfocal\tmass\n";
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      render_dnumber(t.fused[a], p.candidates()[a] + "\t");
    }
    out << "\n";
  }

  if (wants("lvt")) {
    out << "== lvt ==\n";
    out << "candidate\tterm\tweight\n";
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      const auto& dist = t.distributions[a];
      for (std::size_t i = 0; i < dist.labels().size(); ++i) {
        out << p.candidates()[a] << "\t" << dist.labels()[i] << "\t"
            << fixed(dist.weights()[i], prec) << "\n";
      }
    }
    out << "\n";
  }

  if (wants("decision")) {
    out << "== decision ==\n";
    out << "msd-threshold\t" << t.msd_threshold << "\n";
    out << "candidate\tmsd\n";
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      out << p.candidates()[a] << "\t" << fixed(t.msd_values[a], prec) << "\n";
    }
    out << "ranking\t" << ranking_line(t.ranking) << "\n";
    if (t.ranking.tie_notes.empty()) {
      out << "tie-breaks\tnone\n";
    } else {
      for (const auto& note : t.ranking.tie_notes) {
        out << "tie-breaks\t" << note << "\n";
      }
    }
  }

  return std::move(out).str();
}

std::string render_report_json(const DecisionProblem& p, const PipelineTrace& t,
                               const ReportOptions& options) {
  check_stage(options.stage);
  using json = nlohmann::ordered_json;
  auto wants = [&](std::string_view name) {
    return !options.stage || *options.stage == name;
  };
  json doc;

  auto dnumber_json = [](const DNumber& d) {
    json out = json::object();
    for (const auto& [mask, value] : d.masses()) {
      std::string key;
      for (const auto& l : d.domain().labels_of(mask)) {
        if (!key.empty()) {
          key += ",";
        }
        key += l;
      }
      out[key] = value;
    }
    if (d.theta_mass() > 0.0) {
      out["theta"] = d.theta_mass();
    }
    return out;
  };

  if (wants("aggregation")) {
    json stage = json::object();
    for (std::size_t c = 0; c < p.criteria().size(); ++c) {
      json row = json::object();
      for (std::size_t a = 0; a < p.candidates().size(); ++a) {
        const auto& x = t.aggregated[c][a];
        row[p.candidates()[a]] = {x.a(), x.b(), x.c()};
      }
      stage[p.criteria()[c]] = std::move(row);
    }
    doc["aggregation"] = std::move(stage);
  }
  if (wants("d-numbers")) {
    json stage = json::object();
    for (std::size_t c = 0; c < p.criteria().size(); ++c) {
      json row = json::object();
      for (std::size_t a = 0; a < p.candidates().size(); ++a) {
        row[p.candidates()[a]] = dnumber_json(t.per_criterion[c][a]);
      }
      stage[p.criteria()[c]] = std::move(row);
    }
    doc["d-numbers"] = std::move(stage);
  }
  if (wants("fusion")) {
    json stage = json::object();
    stage["epsilon"] = t.epsilon;
    json fused = json::object();
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      fused[p.candidates()[a]] = dnumber_json(t.fused[a]);
    }
    stage["fused"] = std::move(fused);
    doc["fusion"] = std::move(stage);
  }
  if (wants("lvt")) {
    json stage = json::object();
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      const auto& dist = t.distributions[a];
      json weights = json::object();
      for (std::size_t i = 0; i < dist.labels().size(); ++i) {
        weights[dist.labels()[i]] = dist.weights()[i];
      }
      stage[p.candidates()[a]] = std::move(weights);
    }
    doc["lvt"] = std::move(stage);
  }
  if (wants("decision")) {
    json stage = json::object();
    stage["msd-threshold"] = t.msd_threshold;
    json values = json::object();
    for (std::size_t a = 0; a < p.candidates().size(); ++a) {
      values[p.candidates()[a]] = t.msd_values[a];
    }
    stage["msd"] = std::move(values);
    json order = json::array();
    for (const auto& r : t.ranking.order) {
      order.push_back(r.candidate);
    }
    stage["ranking"] = std::move(order);
    stage["tie-breaks"] = t.ranking.tie_notes;
    doc["decision"] = std::move(stage);
  }

  return doc.dump(2) + "\n";
}

}  // namespace dnt
