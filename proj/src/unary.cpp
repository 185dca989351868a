#include "nonblock/unary.hpp"

#include <cassert>
#include <chrono>
#include <set>
#include <unordered_map>

#include "nonblock/determinize.hpp"
#include "nonblock/error.hpp"

namespace nonblock {
namespace {

// Union of the matrix rows indexed by `from`, read back as a sorted state
// list.  This is one shared-event step of the determinized product,
// restricted to a single component.
std::vector<StateId> advance_subset(const BoolMatrix& m,
                                    const std::vector<StateId>& from) {
  size_t wpr = m.words_per_row();
  std::vector<uint64_t> acc(wpr, 0);
  for (StateId s : from) {
    const uint64_t* row = m.row_words(s);
    for (size_t w = 0; w < wpr; ++w) acc[w] |= row[w];
  }
  std::vector<StateId> out;
  for (size_t w = 0; w < wpr; ++w) {
    uint64_t bits = acc[w];
    while (bits) {
      unsigned low = static_cast<unsigned>(__builtin_ctzll(bits));
      out.push_back(static_cast<StateId>(w * 64 + low));
      bits &= bits - 1;
    }
  }
  return out;
}

bool subset_intersects(const std::vector<StateId>& sorted_a,
                       const std::vector<StateId>& sorted_b) {
  size_t i = 0, j = 0;
  while (i < sorted_a.size() && j < sorted_b.size()) {
    if (sorted_a[i] == sorted_b[j]) return true;
    if (sorted_a[i] < sorted_b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct TupleHash {
  size_t operator()(const TupleState& t) const {
    uint64_t h = 1469598103934665603ull;  // FNV offset basis
    for (const auto& subset : t.subsets) {
      h = (h ^ 0x9e3779b97f4a7c15ull) * 1099511628211ull;
      for (StateId s : subset) {
        h = (h ^ s) * 1099511628211ull;
      }
    }
    return static_cast<size_t>(h);
  }
};

// Shared-event powers applied to the initial subsets, one component per
// matrix; nullopt as soon as any component subset is empty.
template <typename Exponent>
std::optional<TupleState> tuple_state_by_powers(const UnarySystem& sys,
                                                const Exponent& k) {
  TupleState tuple;
  tuple.subsets.reserve(sys.components.size());
  for (const UnaryComponent& comp : sys.components) {
    BoolMatrix power = bool_pow(comp.matrix, k);
    std::vector<StateId> subset;
    for (size_t t = 0; t < power.size(); ++t) {
      for (StateId s : comp.initial_subset) {
        if (power.get(s, t)) {
          subset.push_back(static_cast<StateId>(t));
          break;
        }
      }
    }
    if (subset.empty()) return std::nullopt;
    tuple.subsets.push_back(std::move(subset));
  }
  return tuple;
}

}  // namespace

UnarySystem unary_abstract(const std::vector<Dfa>& components,
                           const std::optional<std::string>& shared_event) {
  if (components.empty()) {
    throw Error(ErrorCode::EmptyComposition, "no components to abstract");
  }

  std::set<std::string> shared;
  for (size_t i = 0; i < components.size(); ++i) {
    for (size_t j = i + 1; j < components.size(); ++j) {
      const Alphabet& a = components[i].alphabet();
      const Alphabet& b = components[j].alphabet();
      for (size_t e = 0; e < a.size(); ++e) {
        if (b.contains(a.label(static_cast<EventId>(e)))) {
          shared.insert(a.label(static_cast<EventId>(e)));
        }
      }
    }
  }

  std::string event;
  if (components.size() >= 2) {
    if (shared.size() != 1) {
      throw Error(ErrorCode::SharedAlphabetViolation,
                  "expected exactly one shared event, found " +
                      std::to_string(shared.size()));
    }
    event = *shared.begin();
    if (shared_event && *shared_event != event) {
      throw Error(ErrorCode::SharedAlphabetViolation,
                  "requested shared event '" + *shared_event +
                      "' but components share '" + event + "'");
    }
  } else {
    // A single component has no pairwise intersections to derive the event
    // from; the caller has to name it.
    if (!shared_event) {
      throw Error(ErrorCode::SharedAlphabetViolation,
                  "single component: shared event must be given explicitly");
    }
    event = *shared_event;
  }

  UnarySystem sys;
  sys.shared_event = event;
  sys.components.reserve(components.size());
  for (const Dfa& comp : components) {
    // Components need not carry the shared event themselves (it only has to
    // be the unique event any two alphabets agree on); project onto nothing
    // in that case, leaving an all-false matrix.
    std::vector<std::string> keep;
    if (comp.alphabet().contains(event)) keep.push_back(event);
    Automaton projected = project_onto(comp, keep);

    BoolMatrix m(projected.num_states());
    for (const Transition& t : projected.transitions()) {
      m.set(t.from, t.to, true);
    }
    sys.components.push_back(UnaryComponent{
        std::move(m), projected.initial(), projected.marked()});
  }
  return sys;
}

std::optional<TupleState> tuple_state(const UnarySystem& sys, uint64_t k) {
  return tuple_state_by_powers(sys, k);
}

std::optional<TupleState> tuple_state(const UnarySystem& sys,
                                      const BigUint& k) {
  return tuple_state_by_powers(sys, k);
}

bool is_marked(const UnarySystem& sys, const TupleState& tuple) {
  for (size_t i = 0; i < sys.components.size(); ++i) {
    if (!subset_intersects(tuple.subsets[i], sys.components[i].marked)) {
      return false;
    }
  }
  return true;
}

bool verify_certificate(const UnarySystem& sys, const LassoCertificate& cert) {
  std::optional<TupleState> at_k = tuple_state(sys, cert.k);
  if (!at_k || !is_marked(sys, *at_k)) return false;
  if (!cert.ell) {
    return !tuple_state(sys, cert.k.plus_one()).has_value();
  }
  if (*cert.ell <= cert.k) return false;
  std::optional<TupleState> at_ell = tuple_state(sys, *cert.ell);
  return at_ell && *at_ell == *at_k;
}

UnaryDecision decide_one_shared_event(
    const std::vector<Dfa>& components,
    const std::optional<std::string>& shared_event,
    const SearchLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  UnarySystem sys = unary_abstract(components, shared_event);

  auto elapsed_ms = [&start]() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  // Walk the deterministic tuple sequence q_0, q_1, ... until it dies or
  // repeats.  Determinism makes the sequence a lasso: a stem and at most one
  // cycle; `seen` maps each tuple to the step where it first occurred.
  std::unordered_map<TupleState, uint64_t, TupleHash> seen;
  std::vector<bool> marked_at;

  TupleState current;
  current.subsets.reserve(sys.components.size());
  for (const UnaryComponent& comp : sys.components) {
    current.subsets.push_back(comp.initial_subset);
  }

  uint64_t step = 0;
  std::optional<uint64_t> cycle_start;
  bool died = false;
  while (true) {
    auto [it, inserted] = seen.emplace(current, step);
    if (!inserted) {
      cycle_start = it->second;
      assert(*cycle_start < step && "unary walk revisited a future tuple");
      break;
    }
    marked_at.push_back(is_marked(sys, current));

    if (seen.size() > limits.max_states) {
      throw LimitError("tuple budget of " + std::to_string(limits.max_states) +
                           " exceeded in unary walk",
                       SearchStats{seen.size(), 1, elapsed_ms(), true});
    }
    if ((step & 0x3FF) == 0 && elapsed_ms() > limits.max_seconds * 1000.0) {
      throw LimitError("time budget exceeded in unary walk",
                       SearchStats{seen.size(), 1, elapsed_ms(), true});
    }

    TupleState next;
    next.subsets.reserve(sys.components.size());
    bool defined = true;
    for (size_t i = 0; i < sys.components.size(); ++i) {
      std::vector<StateId> subset =
          advance_subset(sys.components[i].matrix, current.subsets[i]);
      if (subset.empty()) {
        defined = false;
        break;
      }
      next.subsets.push_back(std::move(subset));
    }
    if (!defined) {
      died = true;
      break;
    }
    current = std::move(next);
    ++step;
  }

  UnaryDecision decision;
  decision.verdict.stats =
      SearchStats{seen.size(), 1, elapsed_ms(), false};

  if (died) {
    // Steps 0..step are defined and pairwise distinct; step+1 is not.  The
    // last tuple can only be marked from itself, so it decides the verdict.
    if (marked_at[step]) {
      decision.verdict.nonblocking = true;
      decision.certificate = LassoCertificate{BigUint(step), std::nullopt};
      return decision;
    }
  } else {
    // Cycle of period step - cycle_start.  Any marked tuple on the cycle is
    // revisited forever, so every position can still reach it.
    uint64_t period = step - *cycle_start;
    for (uint64_t k = *cycle_start; k < step; ++k) {
      if (marked_at[k]) {
        decision.verdict.nonblocking = true;
        decision.certificate =
            LassoCertificate{BigUint(k), BigUint(k + period)};
        return decision;
      }
    }
  }

  // Blocking: the shortest dead string is one step past the last marked
  // position (the empty string when nothing is marked at all).
  uint64_t witness_len = 0;
  for (uint64_t k = 0; k < marked_at.size(); ++k) {
    if (marked_at[k]) witness_len = k + 1;
  }
  decision.verdict.nonblocking = false;
  decision.verdict.witness =
      EventString(witness_len, sys.shared_event);
  return decision;
}

}  // namespace nonblock
