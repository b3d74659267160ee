#include "cmirred/oracle.hpp"

#include "cmirred/errors.hpp"
#include "cmirred/family.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

namespace cmirred {

namespace {

using Exps = std::vector<std::uint32_t>;
using Clock = std::chrono::steady_clock;

unsigned degree_of(const Exps& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

// All exponent vectors of total degree <= max_degree, descending grlex.
std::vector<Exps> monomials_up_to(std::size_t arity, unsigned max_degree) {
  std::vector<Exps> out;
  Exps cur(arity, 0);
  // Recursive fill of exponents with the remaining degree budget.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), [](const Exps& a, const Exps& b) {
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
  });
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

// Dense polynomial arithmetic over F_q on a fixed monomial basis. Kept apart
// from Polynomial so the search does not share code paths with what it checks.
class DenseSpace {
 public:
  DenseSpace(std::size_t arity, unsigned degree, std::uint32_t q)
      : arity_(arity), degree_(degree), q_(q), mons_(monomials_up_to(arity, degree)) {
    const std::size_t n = mons_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(mons_[i], static_cast<int>(i));
    degrees_.resize(n);
    for (std::size_t i = 0; i < n; ++i) degrees_[i] = degree_of(mons_[i]);
    product_.assign(n * n, -1);
    quotient_.assign(n * n, -1);
    Exps tmp(arity);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (degrees_[i] + degrees_[j] <= degree_) {
          for (std::size_t k = 0; k < arity; ++k) tmp[k] = mons_[i][k] + mons_[j][k];
          product_[i * n + j] = index_.at(tmp);
        }
        bool divides = true;
        for (std::size_t k = 0; k < arity; ++k) {
          if (mons_[i][k] > mons_[j][k]) {
            divides = false;
            break;
          }
          tmp[k] = mons_[j][k] - mons_[i][k];
        }
        if (divides) quotient_[i * n + j] = index_.at(tmp);  // mons[j] / mons[i]
      }
    }
  }

  std::size_t size() const { return mons_.size(); }
  std::uint32_t modulus() const { return q_; }
  unsigned degree_at(std::size_t i) const { return degrees_[i]; }
  const Exps& monomial(std::size_t i) const { return mons_[i]; }
  int index(const Exps& e) const {
    const auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
  }

  struct Term {
    int index;
    std::uint32_t coef;
  };

  // Divides `target` by the monic `divisor` (first term is the leader).
  // `work` and `quotient` are scratch buffers of size(); on success
  // `quotient` holds the cofactor.
  bool divides(const std::vector<std::uint32_t>& target, const std::vector<Term>& divisor,
               std::vector<std::uint32_t>& work, std::vector<std::uint32_t>& quotient) const {
    const std::size_t n = mons_.size();
    work = target;
    std::fill(quotient.begin(), quotient.end(), 0);
    const int lead = divisor.front().index;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::uint32_t c = work[pos];
      if (c == 0) continue;
      const int qidx = quotient_[static_cast<std::size_t>(lead) * n + pos];
      if (qidx < 0) return false;
      quotient[static_cast<std::size_t>(qidx)] = c;
      for (const Term& t : divisor) {
        const int at = product_[static_cast<std::size_t>(qidx) * n + static_cast<std::size_t>(t.index)];
        if (at < 0) return false;
        std::uint32_t& slot = work[static_cast<std::size_t>(at)];
        const std::uint32_t sub = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * t.coef) % q_);
        slot = slot >= sub ? slot - sub : slot + q_ - sub;
      }
    }
    return true;
  }

 private:
  std::size_t arity_;
  unsigned degree_;
  std::uint32_t q_;
  std::vector<Exps> mons_;
  std::map<Exps, int> index_;
  std::vector<unsigned> degrees_;
  std::vector<int> product_;
  std::vector<int> quotient_;
};

// Candidate enumeration for one leading position: the free coefficients
// (positions after the leader) run through all q^k values as a big-endian
// counter, giving ascending lexicographic order.
struct LeaderBlock {
  std::vector<int> positions;  // leader first, then the free positions
  std::uint64_t count;         // q^(positions.size() - 1)
};

void decode_candidate(const LeaderBlock& block, std::uint64_t counter, std::uint32_t q,
                      std::vector<DenseSpace::Term>& out) {
  out.clear();
  out.push_back({block.positions.front(), 1});
  const std::size_t free = block.positions.size() - 1;
  // Least significant digit is the last position.
  std::vector<std::uint32_t> digits(free);
  for (std::size_t k = free; k-- > 0;) {
    digits[k] = static_cast<std::uint32_t>(counter % q);
    counter /= q;
  }
  for (std::size_t k = 0; k < free; ++k) {
    if (digits[k] != 0) out.push_back({block.positions[k + 1], digits[k]});
  }
}

struct BlockHit {
  std::uint64_t counter;
  std::vector<std::uint32_t> quotient;
};

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> limit)
      : limit_(limit), start_(Clock::now()) {}
  bool expired() const { return limit_ && Clock::now() - start_ > *limit_; }

 private:
  std::optional<std::chrono::milliseconds> limit_;
  Clock::time_point start_;
};

// Scans one leader block for the smallest counter whose candidate divides
// `target`. Returns nullopt if none; throws BudgetHit on timeout.
struct Timeout {};

std::optional<BlockHit> scan_block(const DenseSpace& space, const std::vector<std::uint32_t>& target,
                                   const LeaderBlock& block, unsigned jobs, const Deadline& deadline,
                                   std::atomic<std::uint64_t>& tried) {
  const std::uint64_t total = block.count;
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<bool> timed_out{false};
  std::vector<BlockHit> hits(std::max(1U, jobs));
  const std::uint64_t chunk = 4096;
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker = [&](unsigned id) {
    std::vector<std::uint32_t> work(space.size()), quotient(space.size());
    std::vector<DenseSpace::Term> cand;
    std::uint64_t local_tried = 0;
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(chunk);
      if (begin >= total || begin >= best.load()) break;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t c = begin; c < end; ++c) {
        if (c >= best.load(std::memory_order_relaxed)) break;
        decode_candidate(block, c, space.modulus(), cand);
        ++local_tried;
        if (space.divides(target, cand, work, quotient)) {
          std::uint64_t prev = best.load();
          while (c < prev && !best.compare_exchange_weak(prev, c)) {
          }
          if (c <= best.load()) hits[id] = {c, quotient};
          break;
        }
      }
      if (deadline.expired()) {
        timed_out = true;
        break;
      }
    }
    tried += local_tried;
  };

  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  const std::uint64_t found = best.load();
  if (found != UINT64_MAX) {
    for (auto& h : hits) {
      if (h.counter == found && !h.quotient.empty()) return std::move(h);
    }
  }
  if (timed_out) throw Timeout{};
  return std::nullopt;
}

// Leader blocks for candidates of exact degree `e` over `positions` (a
// descending-grlex list), in ascending lexicographic order.
std::vector<LeaderBlock> leader_blocks(const DenseSpace& space, const std::vector<int>& positions, unsigned e) {
  std::vector<LeaderBlock> blocks;
  for (std::size_t l = positions.size(); l-- > 0;) {
    if (space.degree_at(static_cast<std::size_t>(positions[l])) != e) continue;
    LeaderBlock b;
    b.positions.assign(positions.begin() + static_cast<std::ptrdiff_t>(l), positions.end());
    b.count = saturating_pow(space.modulus(), b.positions.size() - 1);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::vector<int> candidate_positions(const DenseSpace& space, unsigned e, bool homogeneous) {
  std::vector<int> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const unsigned d = space.degree_at(i);
    if (homogeneous ? d == e : d <= e) out.push_back(static_cast<int>(i));
  }
  return out;
}

Polynomial from_dense(const DenseSpace& space, const RingPtr& ring, const std::vector<std::uint32_t>& coefs) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    if (coefs[i] != 0)
      p.add_term(Monomial(space.monomial(i)),
                 FieldElement::from_integer(ring->field, Integer(static_cast<unsigned long>(coefs[i]))));
  }
  return p;
}

std::vector<std::uint32_t> candidate_dense(const DenseSpace& space, const std::vector<DenseSpace::Term>& cand) {
  std::vector<std::uint32_t> out(space.size(), 0);
  for (const auto& t : cand) out[static_cast<std::size_t>(t.index)] = t.coef;
  return out;
}

}  // namespace

std::uint64_t candidate_space_size(std::size_t arity, unsigned max_degree, std::uint64_t q, bool homogeneous) {
  std::uint64_t total = 0;
  for (unsigned e = 1; e <= max_degree; ++e) {
    // Monomials of degree exactly d in `arity` variables: C(d + arity - 1, arity - 1).
    const auto count_exact = [&](unsigned d) {
      std::uint64_t c = 1;
      for (std::size_t k = 1; k < arity; ++k) c = c * (d + k) / k;
      return arity == 0 ? (d == 0 ? 1ULL : 0ULL) : c;
    };
    std::uint64_t block_size = 0;  // monomials available to the candidate
    if (homogeneous) {
      block_size = count_exact(e);
    } else {
      for (unsigned d = 0; d <= e; ++d) block_size += count_exact(d);
    }
    const std::uint64_t leaders = count_exact(e);
    for (std::uint64_t l = 0; l < leaders; ++l) total = saturating_add(total, saturating_pow(q, block_size - l - 1));
  }
  return total;
}

SearchOutcome brute_force_factor_search(const Polynomial& p, const SearchBudget& budget) {
  if (p.field().kind() != FieldKind::Prime) throw PreconditionError("brute-force search needs a prime field");
  if (p.is_constant()) throw PreconditionError("brute-force search needs a non-constant polynomial");
  const std::uint64_t q = p.field().modulus();
  if (q > budget.max_field_size)
    return BudgetExceeded{"field size " + std::to_string(q) + " exceeds budget " +
                          std::to_string(budget.max_field_size)};
  if (q > UINT32_MAX) return BudgetExceeded{"field too large for dense search"};
  const unsigned deg = *p.total_degree();
  const unsigned max_e = deg / 2;
  if (max_e > budget.max_degree)
    return BudgetExceeded{"exhaustive search needs candidate degree " + std::to_string(max_e)};

  const bool homogeneous = budget.homogeneous_only && is_homogeneous(p).homogeneous;
  const bool prune = !homogeneous && budget.prune_by_leading_form;
  if (!prune) {
    const std::uint64_t space_size = candidate_space_size(p.arity(), max_e, q, homogeneous);
    if (space_size > budget.max_candidates)
      return BudgetExceeded{"candidate space " + std::to_string(space_size) + " exceeds budget " +
                            std::to_string(budget.max_candidates)};
  }

  const DenseSpace space(p.arity(), deg, static_cast<std::uint32_t>(q));
  std::vector<std::uint32_t> target(space.size(), 0);
  for (const auto& [m, c] : p.terms()) target[static_cast<std::size_t>(space.index(m.exponents()))] = static_cast<std::uint32_t>(c.residue());

  const Deadline deadline(budget.time_limit);
  std::atomic<std::uint64_t> tried{0};
  const unsigned jobs = std::max(1U, budget.jobs);

  const auto found = [&](const std::vector<DenseSpace::Term>& cand, const std::vector<std::uint32_t>& quotient) {
    return FactorFound{from_dense(space, p.ring_ptr(), candidate_dense(space, cand)),
                       from_dense(space, p.ring_ptr(), quotient), tried.load()};
  };

  try {
    for (unsigned e = 1; e <= max_e; ++e) {
      if (!prune) {
        const auto positions = candidate_positions(space, e, homogeneous);
        for (const auto& block : leader_blocks(space, positions, e)) {
          if (auto hit = scan_block(space, target, block, jobs, deadline, tried)) {
            std::vector<DenseSpace::Term> cand;
            decode_candidate(block, hit->counter, space.modulus(), cand);
            return found(cand, hit->quotient);
          }
        }
        continue;
      }
      // Leading-form pruning: the top-degree part of any divisor divides the
      // top-degree part of p.
      std::vector<std::uint32_t> leading_form(space.size(), 0);
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (space.degree_at(i) == deg) leading_form[i] = target[i];
      }
      const auto head_positions = candidate_positions(space, e, true);
      std::vector<int> tail_positions;
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (space.degree_at(i) < e) tail_positions.push_back(static_cast<int>(i));
      }
      const std::uint64_t tail_count = saturating_pow(q, tail_positions.size());
      std::vector<std::uint32_t> work(space.size()), quotient(space.size());
      std::uint64_t spent = 0;
      for (const auto& block : leader_blocks(space, head_positions, e)) {
        std::vector<DenseSpace::Term> head;
        for (std::uint64_t c = 0; c < block.count; ++c) {
          decode_candidate(block, c, space.modulus(), head);
          ++spent;
          if (!space.divides(leading_form, head, work, quotient)) continue;
          spent = saturating_add(spent, tail_count);
          if (spent > budget.max_candidates)
            return BudgetExceeded{"pruned candidate space exceeds budget " + std::to_string(budget.max_candidates)};
          LeaderBlock tails;
          tails.positions.push_back(-1);
          tails.positions.insert(tails.positions.end(), tail_positions.begin(), tail_positions.end());
          tails.count = tail_count;
          // Candidate = head + tail; scan tails in ascending order.
          std::vector<DenseSpace::Term> tail, cand;
          for (std::uint64_t tc = 0; tc < tail_count; ++tc) {
            decode_candidate(tails, tc, space.modulus(), tail);
            cand = head;
            cand.insert(cand.end(), tail.begin() + 1, tail.end());
            if (space.divides(target, cand, work, quotient)) {
              tried += spent;
              return found(cand, quotient);
            }
          }
          if (deadline.expired()) throw Timeout{};
        }
      }
      tried += spent;
    }
  } catch (const Timeout&) {
    return BudgetExceeded{"time limit reached before the search space was exhausted"};
  }
  return NoFactorFound{tried.load()};
}

// ---------------------------------------------------------------------------

DiscriminantReport discriminant_report(const FieldSpec& field, unsigned m, const FieldElement& t) {
  if (m < 3) throw PreconditionError("discriminant check needs m >= 3");
  const FieldElement two = FieldElement::from_integer(field, 2L);
  if (t.is_zero() || t == two) throw PreconditionError("discriminant check needs t != 0 and t != 2");

  const Polynomial f = build_f(field, m, t);
  const std::size_t ypos = m - 2, zpos = m - 1;
  const auto reduced = symmetric_reduce(f, ypos, zpos);
  if (!reduced) throw InternalAssertion("f is not symmetric in its last two variables");
  const RingPtr& ring = reduced->ring_ptr();

  const Polynomial u = Polynomial::variable(ring, ypos);
  const Polynomial v = Polynomial::variable(ring, zpos);
  Polynomial s2(ring), s4(ring);
  for (std::size_t i = 0; i < ypos; ++i) {
    s2.add_term(Monomial::variable(m, i, 2), FieldElement::one(field));
    s4.add_term(Monomial::variable(m, i, 4), FieldElement::one(field));
  }
  const auto k = [&](long n) { return FieldElement::from_integer(field, n); };
  const FieldElement one_minus_t = k(1) - t;
  const Polynomial u2 = u.pow(2);
  const Polynomial expected_reduced = (k(4) - k(2) * t) * v.pow(2) - k(4) * (one_minus_t * u2 + s2) * v +
                                      s2.pow(2) + one_minus_t * u.pow(4) + k(2) * s2 * u2 - t * s4;

  const auto coeffs = coefficients_in(*reduced, zpos);
  const auto coef = [&](std::size_t i) { return i < coeffs.size() ? coeffs[i] : Polynomial(ring); };
  const Polynomial disc = coef(1).pow(2) - k(4) * coef(2) * coef(0);
  const Polynomial expected_disc =
      (k(8) * t) * ((t - k(1)) * u.pow(4) - k(2) * s2 * u2 + (k(2) - t) * s4 + s2.pow(2));

  return {*reduced, expected_reduced, disc, expected_disc, *reduced == expected_reduced, disc == expected_disc};
}

bool discriminant_check(const FieldSpec& field, unsigned m, const FieldElement& t) {
  const auto report = discriminant_report(field, m, t);
  return report.reduced_matches && report.discriminant_matches;
}

bool random_identity_test(const Polynomial& lhs, const Polynomial& rhs, unsigned trials, std::uint64_t seed) {
  if (!(lhs.ring() == rhs.ring())) throw RingMismatch("identity test operands in different rings");
  const bool exact = (lhs - rhs).is_zero();
  std::mt19937_64 rng(seed);
  const FieldSpec& field = lhs.field();
  std::uniform_int_distribution<long> small(-50, 50);
  bool pointwise = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::vector<FieldElement> point;
    for (std::size_t i = 0; i < lhs.arity(); ++i) {
      switch (field.kind()) {
        case FieldKind::Rational:
        {
          Rational r(small(rng), static_cast<unsigned long>(1 + rng() % 7));
          r.canonicalize();
          point.push_back(FieldElement::from_rational(field, r));
          break;
        }
        case FieldKind::Prime:
          point.push_back(FieldElement::from_integer(
              field, Integer(static_cast<unsigned long>(rng() % field.modulus()))));
          break;
        case FieldKind::Cyclotomic:
          point.push_back(FieldElement::cyclotomic(small(rng), small(rng)));
          break;
      }
    }
    if (!(lhs.evaluate(point) == rhs.evaluate(point))) {
      pointwise = false;
      break;
    }
  }
  return exact && pointwise;
}

}  // namespace cmirred
