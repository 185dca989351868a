#include "nonblock/random_gen.hpp"

#include <algorithm>

#include "nonblock/error.hpp"
#include "nonblock/verify.hpp"
#include "internal.hpp"

namespace nonblock {

RandomStream::RandomStream(uint64_t seed, const std::string& name) {
  uint64_t tag = detail::fnv1a(name);
  std::seed_seq sequence{
      static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
      static_cast<uint32_t>(tag), static_cast<uint32_t>(tag >> 32)};
  rng_.seed(sequence);
}

uint32_t RandomStream::below(uint32_t bound) {
  return static_cast<uint32_t>(next_u64() % bound);
}

uint32_t RandomStream::in_range(uint32_t lo, uint32_t hi) {
  return lo + below(hi - lo + 1);
}

bool RandomStream::chance(uint32_t numerator, uint32_t denominator) {
  return below(denominator) < numerator;
}

namespace {

std::vector<std::string> letter_alphabet(uint32_t num_events) {
  std::vector<std::string> labels;
  for (uint32_t e = 0; e < num_events; ++e) {
    labels.push_back(std::string(1, static_cast<char>('a' + e)));
  }
  return labels;
}

}  // namespace

Automaton random_nfa(RandomStream& rs, uint32_t max_states,
                     uint32_t num_events) {
  AutomatonData data;
  data.num_states = rs.in_range(1, max_states);
  data.alphabet = letter_alphabet(num_events);

  // Roughly 1.2 outgoing targets per (state, event) pair keeps the automata
  // sparse but connected enough to be interesting.
  for (uint32_t q = 0; q < data.num_states; ++q) {
    for (const std::string& label : data.alphabet) {
      for (uint32_t t = 0; t < data.num_states; ++t) {
        if (rs.chance(6, 5 * data.num_states)) {
          data.transitions.emplace_back(q, label, t);
        }
      }
    }
  }

  data.initial.push_back(rs.below(data.num_states));
  if (data.num_states > 1 && rs.chance(1, 3)) {
    data.initial.push_back(rs.below(data.num_states));
  }
  for (uint32_t q = 0; q < data.num_states; ++q) {
    if (rs.chance(1, 3)) data.marked.push_back(q);
  }
  return Automaton::validate(data);
}

Dfa random_dfa(RandomStream& rs, uint32_t max_states,
               const std::vector<std::string>& alphabet) {
  AutomatonData data;
  data.num_states = rs.in_range(1, max_states);
  data.alphabet = alphabet;

  for (uint32_t q = 0; q < data.num_states; ++q) {
    for (const std::string& label : alphabet) {
      if (rs.chance(3, 4)) {
        data.transitions.emplace_back(q, label, rs.below(data.num_states));
      }
    }
  }

  data.initial.push_back(rs.below(data.num_states));
  for (uint32_t q = 0; q < data.num_states; ++q) {
    if (rs.chance(1, 3)) data.marked.push_back(q);
  }
  if (data.marked.empty()) data.marked.push_back(rs.below(data.num_states));
  return Dfa::validate(data);
}

Dfa random_trim_dfa(RandomStream& rs, uint32_t max_states,
                    const std::vector<std::string>& alphabet) {
  while (true) {
    Dfa candidate = accessible_part(random_dfa(rs, max_states, alphabet));
    std::vector<StateId> core = coreachable_states(candidate);
    if (!std::binary_search(core.begin(), core.end(),
                            candidate.initial_state())) {
      continue;  // nothing marked is reachable; draw again
    }

    // Keep the coreachable states only; every surviving state stays both
    // reachable and coreachable because connecting paths never leave the
    // kept set.
    std::vector<uint32_t> new_id(candidate.num_states(), UINT32_MAX);
    for (size_t i = 0; i < core.size(); ++i) new_id[core[i]] = i;

    AutomatonData data;
    data.num_states = static_cast<uint32_t>(core.size());
    data.alphabet = alphabet;
    for (const Transition& t : candidate.transitions()) {
      if (new_id[t.from] != UINT32_MAX && new_id[t.to] != UINT32_MAX) {
        data.transitions.emplace_back(
            new_id[t.from], candidate.alphabet().label(t.event), new_id[t.to]);
      }
    }
    data.initial.push_back(new_id[candidate.initial_state()]);
    for (StateId q : candidate.marked()) {
      if (new_id[q] != UINT32_MAX) data.marked.push_back(new_id[q]);
    }
    return Dfa::validate(data);
  }
}

std::vector<Dfa> random_modular_instance(RandomStream& rs, uint32_t n,
                                         uint32_t max_states) {
  bool disjoint = rs.chance(1, 4);
  std::vector<Dfa> components;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<std::string> alphabet;
    if (disjoint) {
      alphabet = {"p" + std::to_string(i), "q" + std::to_string(i)};
    } else {
      alphabet = {"a", "b"};
      if (rs.chance(1, 2)) alphabet.push_back("p" + std::to_string(i));
    }
    components.push_back(rs.chance(1, 2)
                             ? random_trim_dfa(rs, max_states, alphabet)
                             : random_dfa(rs, max_states, alphabet));
  }
  return components;
}

std::vector<Dfa> random_one_shared_instance(RandomStream& rs, uint32_t n,
                                            uint32_t max_states) {
  std::vector<Dfa> components;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<std::string> alphabet = {"a", "b" + std::to_string(i)};
    components.push_back(random_trim_dfa(rs, max_states, alphabet));
  }
  return components;
}

Graph random_graph(RandomStream& rs, uint32_t max_nodes, uint32_t max_edges) {
  Graph g;
  g.nodes = rs.in_range(1, max_nodes);
  uint32_t edges = rs.below(max_edges + 1);
  for (uint32_t i = 0; i < edges; ++i) {
    g.edges.emplace_back(rs.below(g.nodes), rs.below(g.nodes));
  }
  g.source = rs.below(g.nodes);
  g.target = rs.below(g.nodes);
  return g;
}

Cnf3 random_cnf3(RandomStream& rs, uint32_t max_vars, uint32_t max_clauses) {
  if (max_vars < 3) {
    throw Error(ErrorCode::InstanceTooLarge,
                "need at least 3 variables for distinct-variable clauses");
  }
  Cnf3 f;
  f.num_vars = rs.in_range(3, max_vars);
  uint32_t clauses = rs.in_range(1, max_clauses);
  for (uint32_t c = 0; c < clauses; ++c) {
    // Three distinct variables by rejection; cheap at these sizes.
    uint32_t v0 = rs.below(f.num_vars);
    uint32_t v1 = v0, v2 = v0;
    while (v1 == v0) v1 = rs.below(f.num_vars);
    while (v2 == v0 || v2 == v1) v2 = rs.below(f.num_vars);
    f.clauses.push_back(Clause{Literal{v0, rs.chance(1, 2)},
                               Literal{v1, rs.chance(1, 2)},
                               Literal{v2, rs.chance(1, 2)}});
  }
  return f;
}

BoolMatrix random_bool_matrix(RandomStream& rs, uint32_t size,
                              uint32_t density_pct) {
  BoolMatrix m(size);
  for (uint32_t i = 0; i < size; ++i) {
    for (uint32_t j = 0; j < size; ++j) {
      if (rs.chance(density_pct, 100)) m.set(i, j, true);
    }
  }
  return m;
}

}  // namespace nonblock
