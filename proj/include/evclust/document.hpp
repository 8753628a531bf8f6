#pragma once

// Evidence documents: JSON with keys `actions`, `events`, `evidences` and
// `domain_prior`. Masses are decimal (or "p/q") strings so that they can be
// read exactly.
//
//   {
//     "actions": ["B", "R"],
//     "events": ["E1", "E2"],
//     "evidences": [
//       {"id": "e1", "focals": [
//         {"actions": ["B"], "events": ["E1"], "mass": "0.8"},
//         {"actions": ["B", "R"], "events": ["E1", "E2"], "mass": "0.2"}]}
//     ],
//     "domain_prior": {"2": "1"}
//   }

#include "evclust/domain.hpp"
#include "evclust/evidence.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace evclust {

template <class T>
struct Document {
  EvidenceSet<T> evidences;
  DomainDistribution<T> prior;
};

/// Errors: Errc::schema (malformed), Errc::mass (sum != 1 beyond 1e-9),
/// Errc::unknown_atom. Sums within tolerance are renormalized exactly.
template <class T>
Document<T> parse_document(std::string_view text);

template <class T>
Document<T> load_document(const std::filesystem::path& path);

/// Canonical form: declaration order for atoms and evidences, focal elements
/// in frame-bit order, zero masses dropped, prior counts ascending.
template <class T>
std::string serialize_document(const Document<T>& doc);

}  // namespace evclust
