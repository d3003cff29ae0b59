#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinmut/mapping.hpp"
#include "artinmut/presentation.hpp"
#include "artinmut/word.hpp"

namespace artinmut {

// ---------------------------------------------------------------------------
// Coset enumeration

inline constexpr std::size_t kDefaultCosetCap = 1000000;

enum class CosetStatus { Complete, Capped };

// Todd-Coxeter table over the trivial subgroup. Column 2g is generator g,
// column 2g+1 its inverse; coset 0 is the identity.
struct CosetTable {
  int n_generators = 0;
  CosetStatus status = CosetStatus::Capped;
  std::vector<int> rows;  // cosets x 2n, complete tables only
  std::size_t order = 0;  // number of cosets when complete
  std::size_t defined = 0;  // total cosets ever defined

  int action(int coset, Letter l) const {
    return rows[static_cast<std::size_t>(coset) * static_cast<std::size_t>(2 * n_generators) +
                static_cast<std::size_t>(l.code())];
  }
};

// HLT relator scanning with coincidence processing; on reaching `cap` live
// cosets a lookahead pass runs before giving up with status Capped.
CosetTable todd_coxeter(const Presentation& p, std::size_t cap = kDefaultCosetCap);

// w = e in the enumerated group. Throws BudgetExhausted on a capped table.
bool word_trivial_in_coxeter(const CosetTable& t, const Word& w);

// Necessary condition for w = e: the exponent vector of w lies in the integer
// span of the relator exponent vectors. For finite-type Artin presentations
// this identifies generators joined by odd m_ij and nothing else.
bool abelianization_check(const Presentation& p, const Word& w);

// ---------------------------------------------------------------------------
// Certified rewriting

// Inserting `rotation(core(R_relator)^(inverse ? -1 : 1), offset)` at
// `position` and reducing; the relator core is its cyclic reduction.
struct ProofStep {
  std::size_t position = 0;
  std::size_t relator = 0;
  bool inverse = false;
  std::size_t offset = 0;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct ProofCertificate {
  Word start;
  std::vector<ProofStep> steps;
};

struct SearchBudget {
  std::size_t extra_len = 16;     // max cyclic length = |w| + extra_len
  std::size_t max_nodes = 1000000;
};

struct ProofResult {
  std::optional<ProofCertificate> certificate;
  std::size_t nodes = 0;  // distinct cyclic words visited
};

// Best-first search over cyclically reduced words. A missing certificate
// means the budget ran out, never that w is nontrivial.
ProofResult prove_trivial(const Presentation& p, const Word& w, const SearchBudget& budget = {});

// Replays a certificate with code independent of the searcher.
bool replay_certificate(const Presentation& p, const ProofCertificate& c);

// ---------------------------------------------------------------------------
// Homomorphism and invariance checks

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v) noexcept;

enum class RelatorStatus { Certified, BudgetLimited, Refuted };
const char* to_string(RelatorStatus s) noexcept;

struct VerifyBudget {
  SearchBudget search;
  std::size_t coset_cap = kDefaultCosetCap;
  // Worker count; 0 means the hardware concurrency.
  int threads = 0;
};

struct RelatorRecord {
  std::size_t index = 0;
  Relator relator;
  Word image;
  std::optional<bool> coxeter_trivial;  // nullopt when the quotient was capped
  bool abelian_trivial = false;
  RelatorStatus status = RelatorStatus::BudgetLimited;
  std::optional<ProofCertificate> certificate;
  std::size_t nodes = 0;
};

struct HomomorphismReport {
  std::string label;
  Verdict verdict = Verdict::Inconclusive;
  CosetStatus coset_status = CosetStatus::Capped;
  std::size_t quotient_order = 0;
  std::vector<RelatorRecord> records;
};

struct InvarianceReport {
  Diagram diagram;
  int k = 0;
  HomomorphismReport phi;
  HomomorphismReport psi;
  bool psi_phi_identity = false;
  bool phi_psi_identity = false;
  Verdict verdict = Verdict::Inconclusive;
};

// `requested` (or the hardware concurrency when 0), capped by a positive
// ARTIN_MUTATE_THREADS.
int resolve_threads(int requested);

// Every source relator is transported and classified: Refuted if the
// abelianization or the Coxeter quotient rejects it, Certified with a replayed
// certificate, BudgetLimited otherwise. Verdict: Fail if any relator is
// refuted, Inconclusive if any is budget-limited, Pass otherwise.
HomomorphismReport verify_homomorphism(const GroupMap& m, const VerifyBudget& budget = {});

InvarianceReport verify_mutation_invariance(const Diagram& g, int k,
                                            const PresentationOptions& opts = {},
                                            const VerifyBudget& budget = {});

// ---------------------------------------------------------------------------
// Soundness fuzzing

struct SoundnessReport {
  std::size_t words = 0;
  std::size_t quotient_trivial = 0;
  std::size_t abelian_trivial = 0;
  std::size_t certified = 0;
  // Certificates for words the quotient or the abelianization rejects, or
  // that fail replay. Always 0 for a sound prover.
  std::size_t violations = 0;
};

// Seeded random words over p, half uniform and half products of conjugated
// relators; each is run through the quotient, the abelianization and the
// prover with budget.search. Throws BudgetExhausted if the quotient is capped.
SoundnessReport fuzz_soundness(const Presentation& p, std::uint64_t seed, std::size_t count,
                               const VerifyBudget& budget = {});

}  // namespace artinmut
