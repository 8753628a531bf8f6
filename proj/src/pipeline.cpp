#include "evclust/pipeline.hpp"

#include "evclust/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace evclust {

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::partition: return "partition";
    case Stage::specify: return "specify";
    case Stage::posterior: return "posterior";
    case Stage::pipeline: return "pipeline";
  }
  return "pipeline";
}

template <class T>
PipelineResult<T> run_pipeline(const Document<T>& doc, Stage stage, const RunConfig& config) {
  const EvidenceSet<T>& set = doc.evidences;
  SearchOptions options{config.restarts, config.seed, true};
  PipelineResult<T> out{stage, config, search(set, doc.prior, options), {}, {}, {}, {}, {}, {}, {}};
  if (stage == Stage::partition) return out;

  const Partition& p = out.search.partition;
  ConflictCache<T> cache(set);
  SpecifyOptions spec{config.singleton_support};
  for (std::size_t q = 0; q < set.size(); ++q) {
    out.assessments.push_back(assess(cache, p, doc.prior, q, spec));
    out.discount.push_back(discount_factors(out.assessments.back()));
  }
  if (stage == Stage::specify) return out;

  std::vector<ExistenceEvidence<T>> supports;
  for (std::size_t k = 0; k < p.clusters(); ++k) {
    std::vector<MassFunction<T>> discounted;
    std::vector<T> against;
    for (std::size_t q : p.members(k)) {
      discounted.push_back(discount(set[q].mass, out.discount[q][k]));
      against.push_back(out.assessments[q].against[k]);
    }
    ClusterExistence<T> ce{existence_support<T>(k, discounted), T(1), {}};
    ce.discounted = falsity_discount_existence<T>(ce.raw, against);
    T all_false(1);
    for (const T& a : against) all_false *= a;
    ce.falsity_factor = T(1) - all_false;
    supports.push_back(ce.discounted);
    out.existence.push_back(std::move(ce));
  }
  out.counts = counts_bpa<T>(supports);
  out.posterior = posterior(doc.prior, *out.counts);
  if (stage == Stage::posterior) return out;

  try {
    std::vector<EventEvidence<T>> events;
    for (std::size_t k = 0; k < p.clusters(); ++k) {
      std::vector<std::size_t> members = p.members(k);
      events.push_back(project_events<T>(k, set, members));
    }
    out.assignment = assign<T>(events);
  } catch (const Error& e) {
    if (e.code() != Errc::too_large && e.code() != Errc::total_conflict) throw;
    out.assignment_error = std::make_pair(e.code(), std::string(e.what()));
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

template <class T>
double num(const T& x) {
  return round12(to_double(x));
}

std::string cluster_label(std::size_t k) { return "chi" + std::to_string(k + 1); }

const char* singleton_name(SingletonSupport s) {
  return s == SingletonSupport::as_printed ? "printed" : "complement";
}

template <class T>
ordered_json per_label(const std::vector<T>& values) {
  ordered_json out = ordered_json::object();
  for (std::size_t k = 0; k < values.size(); ++k) out[cluster_label(k)] = num(values[k]);
  return out;
}

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

template <class T>
std::string render_report(const Document<T>& doc, const PipelineResult<T>& r) {
  const EvidenceSet<T>& set = doc.evidences;
  const Partition& p = r.search.partition;
  ordered_json out;
  out["tool"] = "evclust";
  out["version"] = version_string;
  out["stage"] = stage_name(r.stage);
  out["config"] = {{"restarts", r.config.restarts},
                   {"seed", r.config.seed},
                   {"singleton_support", singleton_name(r.config.singleton_support)}};
  out["evidence_count"] = set.size();

  ordered_json members = ordered_json::array();
  for (std::size_t k = 0; k < p.clusters(); ++k) {
    ordered_json ids = ordered_json::array();
    for (std::size_t q : p.members(k)) ids.push_back(set[q].id);
    members.push_back(std::move(ids));
  }
  ordered_json assignment = ordered_json::object();
  for (std::size_t q = 0; q < set.size(); ++q) assignment[set[q].id] = cluster_label(p.cluster_of(q));
  out["partition"] = {{"clusters", p.clusters()}, {"members", std::move(members)}, {"assignment", std::move(assignment)}};

  ordered_json per_cluster = ordered_json::array();
  for (const T& c : r.search.report.per_cluster) per_cluster.push_back(num(c));
  out["conflicts"] = {{"per_cluster", std::move(per_cluster)},
                      {"domain", num(r.search.report.domain)},
                      {"metaconflict", num(r.search.report.mcf)}};

  ordered_json candidates = ordered_json::array();
  for (const auto& c : r.search.candidates) {
    ordered_json row = {{"clusters", c.clusters}, {"prior_mass", num(c.prior_mass)}, {"pruned", c.pruned}};
    row["best_metaconflict"] = c.best_mcf ? ordered_json(num(*c.best_mcf)) : ordered_json(nullptr);
    candidates.push_back(std::move(row));
  }
  out["search"] = std::move(candidates);

  if (!r.assessments.empty()) {
    ordered_json spec = ordered_json::array();
    for (std::size_t q = 0; q < r.assessments.size(); ++q) {
      const auto& a = r.assessments[q];
      ordered_json row;
      row["evidence"] = set[q].id;
      row["home"] = cluster_label(a.home);
      row["fresh_cluster"] = a.fresh_cluster;
      row["against"] = per_label(a.against);
      row["for_home"] = a.for_home ? ordered_json(num(*a.for_home)) : ordered_json(nullptr);
      row["bel"] = per_label(a.bel);
      row["pls"] = per_label(a.pls);
      row["falsity"] = num(a.falsity);
      row["credibility"] = per_label(credibility(a));
      row["discount"] = per_label(r.discount[q]);
      spec.push_back(std::move(row));
    }
    out["specification"] = std::move(spec);
  }

  if (r.posterior) {
    ordered_json existence = ordered_json::array();
    for (const auto& ce : r.existence) {
      existence.push_back({{"cluster", cluster_label(ce.raw.cluster)},
                           {"support", num(ce.raw.support)},
                           {"falsity_factor", num(ce.falsity_factor)},
                           {"discounted_support", num(ce.discounted.support)},
                           {"clamped", ce.raw.clamped}});
    }
    ordered_json counts = ordered_json::object();
    for (std::size_t k = 0; k < r.counts->masses.size(); ++k) counts[std::to_string(k)] = num(r.counts->masses[k]);
    ordered_json prior = ordered_json::object();
    for (const auto& [c, m] : doc.prior.masses()) prior[std::to_string(c)] = num(m);
    ordered_json dist = ordered_json::object();
    for (const auto& [c, m] : r.posterior->probabilities) dist[std::to_string(c)] = num(m);
    out["posterior"] = {{"existence", std::move(existence)},
                        {"counts_at_least", std::move(counts)},
                        {"prior", std::move(prior)},
                        {"conflict", num(r.posterior->conflict)},
                        {"distribution", std::move(dist)}};
  }

  if (r.stage == Stage::pipeline) {
    const Frame& events = set.frame().events();
    ordered_json ev;
    if (r.assignment) {
      const auto& a = *r.assignment;
      ev["conflict"] = num(a.conflict);
      ordered_json preferred = ordered_json::object();
      ordered_json pls = ordered_json::object();
      ordered_json bel = ordered_json::object();
      for (std::size_t k = 0; k < a.preferred.size(); ++k) {
        preferred[cluster_label(k)] = a.preferred[k] ? ordered_json(events.label(*a.preferred[k])) : ordered_json(nullptr);
        ordered_json pk = ordered_json::object();
        ordered_json bk = ordered_json::object();
        for (std::size_t e = 0; e < events.size(); ++e) {
          pk[events.label(e)] = num(a.pls[k][e]);
          bk[events.label(e)] = num(a.bel[k][e]);
        }
        pls[cluster_label(k)] = std::move(pk);
        bel[cluster_label(k)] = std::move(bk);
      }
      ev["preferred"] = std::move(preferred);
      ev["pls"] = std::move(pls);
      ev["bel"] = std::move(bel);
    } else if (r.assignment_error) {
      ev["error"] = errc_name(r.assignment_error->first);
      ev["message"] = r.assignment_error->second;
    }
    out["events"] = std::move(ev);
  }
  return out.dump(2) + "\n";
}

template <class T>
std::vector<std::pair<std::string, std::string>> render_tables(const Document<T>& doc, const PipelineResult<T>& r) {
  std::vector<std::pair<std::string, std::string>> out;
  {
    std::ostringstream csv;
    csv << "clusters,prior_mass,pruned,best_metaconflict\n";
    for (const auto& c : r.search.candidates) {
      csv << c.clusters << ',' << csv_number(to_double(c.prior_mass)) << ',' << (c.pruned ? 1 : 0) << ','
          << (c.best_mcf ? csv_number(to_double(*c.best_mcf)) : std::string()) << '\n';
    }
    out.emplace_back("mcf_by_r", csv.str());
  }
  if (!r.assessments.empty()) {
    std::ostringstream csv;
    csv << "evidence,cluster,home,against,bel,pls,credibility,discount\n";
    for (std::size_t q = 0; q < r.assessments.size(); ++q) {
      const auto& a = r.assessments[q];
      std::vector<T> cred = credibility(a);
      for (std::size_t k = 0; k < a.frame_size(); ++k) {
        csv << doc.evidences[q].id << ',' << cluster_label(k) << ',' << (k == a.home ? 1 : 0) << ','
            << csv_number(to_double(a.against[k])) << ',' << csv_number(to_double(a.bel[k])) << ','
            << csv_number(to_double(a.pls[k])) << ',' << csv_number(to_double(cred[k])) << ','
            << (k < a.clusters ? csv_number(to_double(r.discount[q][k])) : std::string()) << '\n';
      }
    }
    out.emplace_back("membership", csv.str());
  }
  if (r.posterior) {
    std::ostringstream csv;
    csv << "clusters,prior,posterior\n";
    std::size_t top = std::max(doc.prior.max_count(), r.counts->masses.size() - 1);
    for (std::size_t c = 0; c <= top; ++c) {
      auto it = r.posterior->probabilities.find(c);
      T post = it == r.posterior->probabilities.end() ? T(0) : it->second;
      csv << c << ',' << csv_number(to_double(doc.prior.mass(c))) << ',' << csv_number(to_double(post)) << '\n';
    }
    out.emplace_back("posterior", csv.str());
  }
  return out;
}

template <class T>
std::string render_summary(const Document<T>& doc, const PipelineResult<T>& r) {
  const EvidenceSet<T>& set = doc.evidences;
  const Partition& p = r.search.partition;
  std::ostringstream s;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %8s  %s\n", "cluster", "conflict", "members");
  s << line;
  for (std::size_t k = 0; k < p.clusters(); ++k) {
    std::string ids;
    for (std::size_t q : p.members(k)) ids += (ids.empty() ? "" : " ") + set[q].id;
    std::snprintf(line, sizeof line, "%-10s %8.4f  %s\n", cluster_label(k).c_str(),
                  to_double(r.search.report.per_cluster[k]), ids.c_str());
    s << line;
  }
  std::snprintf(line, sizeof line, "domain conflict %.6g, metaconflict %.6g\n", to_double(r.search.report.domain),
                to_double(r.search.report.mcf));
  s << line;
  if (!r.assessments.empty()) {
    std::snprintf(line, sizeof line, "\n%-12s %-8s %8s  %s\n", "evidence", "home", "falsity", "pls");
    s << line;
    for (std::size_t q = 0; q < r.assessments.size(); ++q) {
      const auto& a = r.assessments[q];
      std::string pls;
      for (std::size_t k = 0; k < a.frame_size(); ++k) {
        char cell[32];
        std::snprintf(cell, sizeof cell, "%s%.4f", k ? " " : "", to_double(a.pls[k]));
        pls += cell;
      }
      std::snprintf(line, sizeof line, "%-12s %-8s %8.4f  %s\n", set[q].id.c_str(), cluster_label(a.home).c_str(),
                    to_double(a.falsity), pls.c_str());
      s << line;
    }
  }
  if (r.posterior) {
    std::snprintf(line, sizeof line, "\n%-10s %8s %10s\n", "clusters", "prior", "posterior");
    s << line;
    for (const auto& [c, m] : doc.prior.masses()) {
      auto it = r.posterior->probabilities.find(c);
      double post = it == r.posterior->probabilities.end() ? 0.0 : to_double(it->second);
      std::snprintf(line, sizeof line, "%-10zu %8.4f %10.4f\n", c, to_double(m), post);
      s << line;
    }
  }
  if (r.assignment) {
    s << "\nevent assignment (conflict " << round12(to_double(r.assignment->conflict)) << ")\n";
    for (std::size_t k = 0; k < r.assignment->preferred.size(); ++k) {
      const auto& e = r.assignment->preferred[k];
      s << "  " << cluster_label(k) << " -> " << (e ? set.frame().events().label(*e) : std::string("none")) << '\n';
    }
  } else if (r.assignment_error) {
    s << "\nevent assignment skipped: " << r.assignment_error->second << '\n';
  }
  return s.str();
}

#define EVCLUST_INSTANTIATE(T)                                                                       \
  template PipelineResult<T> run_pipeline(const Document<T>&, Stage, const RunConfig&);              \
  template std::string render_report(const Document<T>&, const PipelineResult<T>&);                  \
  template std::vector<std::pair<std::string, std::string>> render_tables(const Document<T>&,        \
                                                                          const PipelineResult<T>&); \
  template std::string render_summary(const Document<T>&, const PipelineResult<T>&);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
