#pragma once

// Reference implementations used only by tests. They trade speed for
// simplicity and share no algorithmic code with the library paths they check.

#include "tarep/admissibility.hpp"
#include "tarep/model_io.hpp"
#include "tarep/repair.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using namespace tarep;

// --- corpus -----------------------------------------------------------------

std::filesystem::path models_dir();

struct CorpusEntry {
  std::string name;
  ModelFile model;
};

/// Every violating model in models/ (the bundle first).
std::vector<CorpusEntry> violating_corpus();
ModelFile load(const std::string& file);

// --- linear arithmetic -------------------------------------------------------

/// Feasibility by enumerating basic solutions of the system with strict rows
/// relaxed by a shared epsilon in [0, 1] and a box of half-width `box`.
/// Exponential; intended for <= 3 variables and a handful of atoms.
bool vertex_feasible(const std::vector<LinearAtom>& atoms, std::size_t var_count, long box = 1000);

/// Random atom over `vars` variables with coefficients in [-c, c] and
/// constants in [-k, k]; relation chosen uniformly.
LinearAtom random_atom(std::mt19937& rng, std::size_t vars, int c, int k);

// --- untimed languages -------------------------------------------------------

/// Random single-automaton network: `clocks` clocks, up to 4 locations,
/// constants <= 3, upper-bound invariants, internal transitions labelled
/// with actions a/b/c.
Network random_ta(std::mt19937& rng, std::size_t clocks);

/// Region automaton of a network with integer constants (classic integer
/// part / fractional order construction); delay edges are ε, discrete
/// edges carry their action label (the label of visible internals).
UntimedAutomaton region_automaton(const Network& net, std::int64_t k);

/// Language equality of two ε-NFAs by explicit subset construction and a
/// product walk bounded by |D_a| * |D_b| (every distinct product state is
/// the endpoint of some word up to that length). Returns the first
/// distinguishing word found in breadth-first order, if any.
std::optional<std::vector<std::string>> distinguishing_word(const UntimedAutomaton& a, const UntimedAutomaton& b);

/// All words up to `length` over the union alphabet accepted by exactly one
/// automaton (membership by direct simulation).
std::vector<std::vector<std::string>> differing_words(const UntimedAutomaton& a, const UntimedAutomaton& b,
                                                      std::size_t length);

// --- repair ----------------------------------------------------------------

/// Satisfiability by eliminating every variable with Fourier–Motzkin.
bool fm_satisfiable(const std::vector<LinearAtom>& atoms, std::size_t var_count);

/// Contract re-check that uses only FM: 𝒯' feasible and every disjunct of
/// 𝒯' ∧ ¬Φ infeasible.
bool fm_contract(const Network& repaired, const SymbolicTimedTrace& trace, const Property& prop);

/// Smallest number of modified variation variables over all assignments
/// (nullopt if none repairs the trace). Discrete kinds are decided on the
/// symbolic selector formula; the bound kind on the hard constraint.
std::optional<std::size_t> exhaustive_min_modifications(const VariedSystem& vs);

}  // namespace oracle
