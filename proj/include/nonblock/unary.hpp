#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonblock/automaton.hpp"
#include "nonblock/bignum.hpp"
#include "nonblock/bool_matrix.hpp"
#include "nonblock/verify.hpp"

namespace nonblock {

// One component of a unary system: the shared-event reachability matrix of
// the projected component, the closure J_i of its initial state under
// non-shared events, and the (closure-convention) marked set.
struct UnaryComponent {
  BoolMatrix matrix;
  std::vector<StateId> initial_subset;  // J_i, sorted
  std::vector<StateId> marked;          // sorted
};

struct UnarySystem {
  std::vector<UnaryComponent> components;
  std::string shared_event;
};

// State of the determinized unary product after some number of shared-event
// steps: one subset per component.  A tuple with an empty component is not
// representable; such steps are "undefined" and modeled as std::nullopt by
// the operations below.
struct TupleState {
  std::vector<std::vector<StateId>> subsets;  // each sorted and non-empty

  bool operator==(const TupleState&) const = default;
};

// Nonblockingness certificate for a unary system: the product is marked
// after k steps, and either step k+1 is undefined (ell absent) or the tuple
// after ell > k steps equals the tuple after k (ell present).  The walk
// bounds put k and ell up to 2^(mn+1), beyond native integer width, hence
// arbitrary precision.
struct LassoCertificate {
  BigUint k;
  std::optional<BigUint> ell;
};

struct UnaryDecision {
  Verdict verdict;
  std::optional<LassoCertificate> certificate;  // present iff nonblocking
};

// Abstracts each component to its behavior on the single event shared across
// components: project onto {shared}, eliminate the silent moves, and read
// the result off as a boolean matrix plus initial and marked subsets.
//
// With two or more components the shared event is derived from the pairwise
// alphabet intersections and must be unique; a single component has no pairs,
// so `shared_event` must be supplied.  When both are available they must
// agree.  Throws SharedAlphabetViolation otherwise.
UnarySystem unary_abstract(
    const std::vector<Dfa>& components,
    const std::optional<std::string>& shared_event = std::nullopt);

// Tuple reached after exactly k shared-event steps, via matrix powers;
// nullopt when some component's subset comes up empty.  The BigUint overload
// exists for certificate checking, where k may not fit in 64 bits.
std::optional<TupleState> tuple_state(const UnarySystem& sys, uint64_t k);
std::optional<TupleState> tuple_state(const UnarySystem& sys, const BigUint& k);

// A tuple is marked iff every component subset intersects that component's
// marked set.
bool is_marked(const UnarySystem& sys, const TupleState& tuple);

// Checks a certificate against the matrix-power semantics in time polynomial
// in the component sizes and the bit lengths of k and ell.
bool verify_certificate(const UnarySystem& sys, const LassoCertificate& cert);

// Decides nonblockingness of the unary observer product by walking it
// tuple-by-tuple until the walk dies or revisits a tuple.  Nonblocking
// results carry the minimal certificate (smallest k, then smallest ell);
// blocking results carry a witness of shared-event symbols only (the unary
// abstraction cannot restore non-shared interleavings).  `limits.max_states`
// caps the number of distinct tuples visited.
UnaryDecision decide_one_shared_event(
    const std::vector<Dfa>& components,
    const std::optional<std::string>& shared_event = std::nullopt,
    const SearchLimits& limits = {});

}  // namespace nonblock
