#include "artinmut/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "artinmut/error.hpp"

namespace artinmut {

namespace {

// Budget for the cross-check search on words the quotient already rejects.
constexpr std::size_t kRefutedProbeNodes = 2000;

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(RelatorStatus s) noexcept {
  switch (s) {
    case RelatorStatus::Certified: return "certified";
    case RelatorStatus::BudgetLimited: return "budget-limited";
    case RelatorStatus::Refuted: return "refuted";
  }
  return "?";
}

bool abelianization_check(const Presentation& p, const Word& w) {
  const int n = p.n_generators;
  std::vector<long long> target(static_cast<std::size_t>(n), 0);
  for (Letter l : w) {
    if (l.gen >= n) throw Error(ErrorCode::AlphabetMismatch, "word outside the alphabet");
    target[static_cast<std::size_t>(l.gen)] += l.sign;
  }
  std::vector<std::vector<long long>> rows;
  for (const Relator& r : p.relators) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    for (Letter l : r.word) v[static_cast<std::size_t>(l.gen)] += l.sign;
    if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) rows.push_back(v);
  }
  // Integer row echelon form; each pivot column holds one nonzero row.
  std::size_t top = 0;
  for (int col = 0; col < n && top < rows.size(); ++col) {
    const auto c = static_cast<std::size_t>(col);
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const long long q = rows[r][c] / rows[top][c];
        for (std::size_t k = c; k < static_cast<std::size_t>(n); ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        if (target[c] % rows[top][c] != 0) return false;
        const long long q = target[c] / rows[top][c];
        for (std::size_t k = c; k < static_cast<std::size_t>(n); ++k) target[k] -= q * rows[top][k];
        ++top;
        break;
      }
    }
    if (target[c] != 0) return false;
  }
  return std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
}

int resolve_threads(int requested) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("ARTIN_MUTATE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

namespace {

RelatorRecord check_relator(const GroupMap& m, std::size_t index, const CosetTable& table,
                            const SearchBudget& search) {
  RelatorRecord rec;
  rec.index = index;
  rec.relator = m.source.relators[index];
  rec.image = m.transport(rec.relator.word);
  rec.abelian_trivial = abelianization_check(m.target, rec.image);
  if (table.status == CosetStatus::Complete) {
    rec.coxeter_trivial = word_trivial_in_coxeter(table, rec.image);
  }
  const bool refuted = !rec.abelian_trivial || rec.coxeter_trivial == false;
  SearchBudget b = search;
  if (refuted) b.max_nodes = std::min(b.max_nodes, kRefutedProbeNodes);
  ProofResult pr = prove_trivial(m.target, rec.image, b);
  rec.nodes = pr.nodes;
  if (pr.certificate) {
    if (!replay_certificate(m.target, *pr.certificate)) {
      throw Error(ErrorCode::Internal, "certificate for relator " + std::to_string(index + 1) +
                                           " of " + m.label + " failed replay");
    }
    if (refuted) {
      throw Error(ErrorCode::Internal, "certificate found for a word the quotient rejects (" +
                                           m.label + ", relator " + std::to_string(index + 1) + ")");
    }
    rec.certificate = std::move(pr.certificate);
  }
  rec.status = refuted             ? RelatorStatus::Refuted
               : rec.certificate ? RelatorStatus::Certified
                                 : RelatorStatus::BudgetLimited;
  return rec;
}

// Runs fn(0..n-1) on up to `workers` threads; the first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
  workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int wid) {
    try {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(wid)] = std::current_exception();
      next = n;
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

}  // namespace

HomomorphismReport verify_homomorphism(const GroupMap& m, const VerifyBudget& budget) {
  validate_map(m);
  HomomorphismReport rep;
  rep.label = m.label;
  const CosetTable table = todd_coxeter(m.target.with_involutions(), budget.coset_cap);
  rep.coset_status = table.status;
  rep.quotient_order = table.order;

  const std::size_t n = m.source.relators.size();
  rep.records.resize(n);
  parallel_for(n, resolve_threads(budget.threads),
               [&](std::size_t i) { rep.records[i] = check_relator(m, i, table, budget.search); });

  rep.verdict = Verdict::Pass;
  for (const RelatorRecord& r : rep.records) {
    if (r.status == RelatorStatus::Refuted) rep.verdict = Verdict::Fail;
    if (r.status == RelatorStatus::BudgetLimited) rep.verdict = combine(rep.verdict, Verdict::Inconclusive);
  }
  return rep;
}

InvarianceReport verify_mutation_invariance(const Diagram& g, int k, const PresentationOptions& opts,
                                            const VerifyBudget& budget) {
  InvarianceReport rep;
  rep.diagram = g;
  rep.k = k;
  const GroupMap f = phi(g, k, opts);
  const GroupMap s = psi(g, k, opts);
  rep.phi = verify_homomorphism(f, budget);
  rep.psi = verify_homomorphism(s, budget);

  rep.psi_phi_identity = true;
  rep.phi_psi_identity = true;
  for (int i = 0; i < g.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (s.transport(f.images[idx]) != Word::generator(i)) rep.psi_phi_identity = false;
    if (f.transport(s.images[idx]) != Word::generator(i)) rep.phi_psi_identity = false;
  }
  rep.verdict = combine(rep.phi.verdict, rep.psi.verdict);
  if (!rep.psi_phi_identity || !rep.phi_psi_identity) rep.verdict = Verdict::Fail;
  return rep;
}

SoundnessReport fuzz_soundness(const Presentation& p, std::uint64_t seed, std::size_t count,
                               const VerifyBudget& budget) {
  const CosetTable table = todd_coxeter(p.with_involutions(), budget.coset_cap);
  if (table.status != CosetStatus::Complete) {
    throw Error(ErrorCode::BudgetExhausted, "fuzzing needs a finite Coxeter quotient");
  }
  // Words are drawn up front so the outcome does not depend on the thread count.
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto random_letter = [&] {
    return Letter{static_cast<int>(below(static_cast<std::size_t>(p.n_generators))),
                  below(2) == 0 ? 1 : -1};
  };
  std::vector<Word> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Word w;
    if (i % 2 == 0 || p.relators.empty()) {
      const std::size_t len = 1 + below(12);
      for (std::size_t j = 0; j < len; ++j) w.push_back(random_letter());
    } else {
      // Products of conjugated relators, sometimes perturbed by one letter.
      const std::size_t factors = 1 + below(2);
      for (std::size_t f = 0; f < factors; ++f) {
        Word r = p.relators[below(p.relators.size())].word;
        if (below(2) == 0) r = r.inverse();
        Word x;
        for (std::size_t j = below(3); j > 0; --j) x.push_back(random_letter());
        w *= r.conjugated_by(x);
      }
      if (below(2) == 0) w.push_back(random_letter());
    }
    words.push_back(std::move(w));
  }

  std::vector<unsigned char> quotient(count), abelian(count), certified(count), bad(count);
  parallel_for(count, resolve_threads(budget.threads), [&](std::size_t i) {
    quotient[i] = word_trivial_in_coxeter(table, words[i]);
    abelian[i] = abelianization_check(p, words[i]);
    ProofResult r = prove_trivial(p, words[i], budget.search);
    if (r.certificate) {
      certified[i] = 1;
      bad[i] = !quotient[i] || !abelian[i] || !replay_certificate(p, *r.certificate);
    }
  });
  SoundnessReport rep;
  rep.words = count;
  for (std::size_t i = 0; i < count; ++i) {
    rep.quotient_trivial += quotient[i];
    rep.abelian_trivial += abelian[i];
    rep.certified += certified[i];
    rep.violations += bad[i];
  }
  return rep;
}

}  // namespace artinmut
