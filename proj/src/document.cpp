#include "evclust/document.hpp"

#include "evclust/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace evclust {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(Errc::schema, where + ": missing key '" + key + "'");
  return *it;
}

std::vector<std::string> label_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::schema, where + " must be a list of labels");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(Errc::schema, where + " must contain only strings");
    out.push_back(v.template get<std::string>());
  }
  return out;
}

template <class T>
T mass_value(const json& j, const std::string& where) {
  if (!j.is_string()) fail(Errc::schema, where + ": mass must be a decimal string");
  T m = Numeric<T>::parse(j.get<std::string>());
  if (m < T(0)) fail(Errc::mass, where + ": negative mass");
  return m;
}

FramePtr declared_frame(const json& doc, const char* key) {
  auto labels = label_list(require(doc, key, "document"), key);
  if (labels.empty()) fail(Errc::schema, std::string(key) + " must not be empty");
  try {
    return make_frame(std::move(labels));
  } catch (const Error& e) {
    if (e.code() == Errc::too_large) throw;
    fail(Errc::schema, std::string(key) + ": " + e.what());
  }
}

template <class T>
Evidence<T> parse_evidence(const json& j, const JointFramePtr& frame, std::size_t index) {
  std::string where = "evidences[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(Errc::schema, where + " must be an object");
  const json& id = require(j, "id", where);
  if (!id.is_string()) fail(Errc::schema, where + ".id must be a string");
  Evidence<T> ev{id.get<std::string>(), MassFunction<T>::vacuous(frame->product()), {}};
  where = "evidence '" + ev.id + "'";

  const json& focals = require(j, "focals", where);
  if (!focals.is_array() || focals.empty()) fail(Errc::schema, where + ": focals must be a non-empty list");
  std::vector<typename MassFunction<T>::Focal> list;
  std::set<std::uint64_t> seen;
  T total(0);
  for (const auto& f : focals) {
    if (!f.is_object()) fail(Errc::schema, where + ": focal must be an object");
    auto actions = label_list(require(f, "actions", where), where + ".actions");
    auto events = label_list(require(f, "events", where), where + ".events");
    if (actions.empty() || events.empty()) {
      fail(Errc::schema, where + ": focal needs a non-empty action part and event part");
    }
    Subset a = frame->actions().subset_of(actions);
    Subset e = frame->events().subset_of(events);
    Subset joint = frame->rectangle(a, e);
    if (!seen.insert(joint.bits()).second) fail(Errc::schema, where + ": duplicate focal element");
    T m = mass_value<T>(require(f, "mass", where), where);
    total += m;
    list.emplace_back(joint, m);
  }
  if (!Numeric<T>::sums_to_one(total)) {
    fail(Errc::mass, where + ": masses sum to " + Numeric<T>::format(total) + ", expected 1");
  }
  if (total != T(1)) {
    for (auto& [s, m] : list) m /= total;
  }
  ev.mass = MassFunction<T>(frame->product(), std::move(list));

  if (auto md = j.find("metadata"); md != j.end()) {
    if (!md->is_object()) fail(Errc::schema, where + ": metadata must be an object");
    for (const auto& [k, v] : md->items()) {
      ev.metadata[k] = v.is_string() ? v.template get<std::string>() : v.dump();
    }
  }
  return ev;
}

template <class T>
DomainDistribution<T> parse_prior(const json& j) {
  if (!j.is_object() || j.empty()) fail(Errc::schema, "domain_prior must be a non-empty object");
  std::map<std::size_t, T> masses;
  T total(0);
  for (const auto& [key, value] : j.items()) {
    std::size_t count = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), count);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      fail(Errc::schema, "domain_prior key '" + key + "' is not a cluster count");
    }
    T m = mass_value<T>(value, "domain_prior[" + key + "]");
    total += m;
    masses[count] += m;
  }
  if (!Numeric<T>::sums_to_one(total)) {
    fail(Errc::mass, "domain_prior sums to " + Numeric<T>::format(total) + ", expected 1");
  }
  if (total != T(1)) {
    for (auto& [c, m] : masses) m /= total;
  }
  return DomainDistribution<T>(std::move(masses));
}

}  // namespace

template <class T>
Document<T> parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(Errc::schema, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::schema, "document must be a JSON object");

  auto frame = std::make_shared<const JointFrame>(declared_frame(doc, "actions"), declared_frame(doc, "events"));

  const json& list = require(doc, "evidences", "document");
  if (!list.is_array()) fail(Errc::schema, "evidences must be a list");
  if (list.empty()) fail(Errc::schema, "evidences must not be empty");
  std::vector<Evidence<T>> evidences;
  for (std::size_t i = 0; i < list.size(); ++i) evidences.push_back(parse_evidence<T>(list[i], frame, i));

  DomainDistribution<T> prior = parse_prior<T>(require(doc, "domain_prior", "document"));
  return Document<T>{EvidenceSet<T>(frame, std::move(evidences)), std::move(prior)};
}

template <class T>
Document<T> load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document<T>(buf.str());
}

template <class T>
std::string serialize_document(const Document<T>& doc) {
  const JointFrame& frame = doc.evidences.frame();
  ordered_json out;
  out["actions"] = frame.actions().labels();
  out["events"] = frame.events().labels();
  ordered_json list = ordered_json::array();
  for (const auto& ev : doc.evidences.evidences()) {
    ordered_json e;
    e["id"] = ev.id;
    ordered_json focals = ordered_json::array();
    for (const auto& [s, m] : ev.mass.focal()) {
      ordered_json f;
      f["actions"] = frame.actions().labels_of(frame.action_part(s));
      f["events"] = frame.events().labels_of(frame.event_part(s));
      f["mass"] = Numeric<T>::format(m);
      focals.push_back(std::move(f));
    }
    e["focals"] = std::move(focals);
    if (!ev.metadata.empty()) e["metadata"] = ev.metadata;
    list.push_back(std::move(e));
  }
  out["evidences"] = std::move(list);
  ordered_json prior = ordered_json::object();
  for (const auto& [count, m] : doc.prior.masses()) prior[std::to_string(count)] = Numeric<T>::format(m);
  out["domain_prior"] = std::move(prior);
  return out.dump(2) + "\n";
}

template Document<double> parse_document(std::string_view);
template Document<Rational> parse_document(std::string_view);
template Document<double> load_document(const std::filesystem::path&);
template Document<Rational> load_document(const std::filesystem::path&);
template std::string serialize_document(const Document<double>&);
template std::string serialize_document(const Document<Rational>&);

}  // namespace evclust
