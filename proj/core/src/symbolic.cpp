#include "pwc/symbolic.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace pwc {

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (c > 9) throw Error(ErrorKind::letter_out_of_range, "letter " + std::to_string(c) + " has no digit");
    out.push_back(static_cast<char>('0' + c));
  }
  return out;
}

Word word_from_string(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorKind::parse, std::string("non-digit '") + c + "' in word");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

std::string_view to_string(Witness::Kind kind) {
  return kind == Witness::Kind::connection ? "connection" : "gap-hits-discontinuity";
}

Coding natural_coding(const PiecewiseAffineMap& g, const Scalar& x, std::size_t K, std::string map_id) {
  Coding out{{}, x, std::move(map_id)};
  out.word.reserve(K + 1);
  Scalar current = x;
  for (std::size_t i = 0; i <= K; ++i) {
    Evaluation e = g.evaluate(current);
    out.word.push_back(static_cast<Letter>(e.branch));
    current = std::move(e.value);
  }
  return out;
}

std::uint64_t factor_count(const Word& w, std::size_t k) {
  if (k == 0) return 1;
  if (w.size() < k) return 0;
  const std::string_view text(reinterpret_cast<const char*>(w.data()), w.size());
  std::unordered_set<std::string_view> factors;
  factors.reserve(w.size() - k + 1);
  for (std::size_t i = 0; i + k <= w.size(); ++i) factors.insert(text.substr(i, k));
  return factors.size();
}

ComplexityProfile word_complexity(const Word& w, std::size_t k_max, std::optional<std::size_t> margin) {
  const std::size_t need = k_max + margin.value_or(default_margin(k_max));
  if (w.size() < need)
    throw Error(ErrorKind::prefix_too_short, "prefix of length " + std::to_string(w.size()) + " is shorter than " +
                                                 std::to_string(need) + " needed for k_max = " +
                                                 std::to_string(k_max));
  ComplexityProfile out;
  out.values.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) out.values.push_back(factor_count(w, k));
  return out;
}

ComplexityProfile geometric_complexity(const PiecewiseAffineMap& g, std::size_t k_max) {
  ComplexityProfile out;
  std::vector<std::optional<Scalar>> frontier;
  for (const Scalar& x : g.discontinuities()) frontier.emplace_back(x);
  std::unordered_set<Scalar, ScalarHash> seen;
  const Scalar zero(0);
  std::uint64_t total = 1;
  for (std::size_t level = 0; level < k_max; ++level) {
    std::uint64_t fresh = 0;
    for (auto& point : frontier) {
      if (!point) continue;
      // 0 is the left end of I, never a division point.
      if (*point != zero && seen.insert(*point).second) ++fresh;
    }
    total += fresh;
    out.new_points.push_back(fresh);
    out.values.push_back(total);
    if (level + 1 == k_max) break;
    for (auto& point : frontier) {
      if (point) point = g.preimage(*point);
    }
  }
  return out;
}

namespace {

Scalar union_measure(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Scalar total(0);
  std::optional<Interval> run;
  for (auto& p : pieces) {
    if (p.empty()) continue;
    if (run && p.lo <= run->hi) {
      if (run->hi < p.hi) run->hi = p.hi;
    } else {
      if (run) total += run->length();
      run = std::move(p);
    }
  }
  if (run) total += run->length();
  return total;
}

}  // namespace

Certificate certify(const PiecewiseAffineMap& g, const GapSet& gap, std::size_t depth) {
  GapSet actual = g.gap_set();
  if (!(actual == gap)) throw Error(ErrorKind::gap_mismatch, "supplied gap set differs from I \\ g(I)");

  Certificate cert;
  cert.depth = depth;
  const auto disc = g.discontinuities();
  std::vector<Interval> current = gap.components;
  std::vector<Scalar> points(disc.begin(), disc.end());
  std::vector<Interval> checked;  // all gap iterates that passed, sorted by lo
  Scalar sum(0);

  auto fail = [&](Witness w) {
    cert.pass = false;
    cert.witness = std::move(w);
  };

  for (std::size_t k = 0; k <= depth; ++k) {
    if (k > 0) {
      for (auto& piece : current) {
        ImageResult img = g.image_interval(piece);
        // Unsplit by construction: the previous depth found no discontinuity inside.
        piece = std::move(img.pieces.front());
      }
      for (auto& p : points) p = g(p);
    }

    bool failed = false;
    for (std::size_t j = 0; j < current.size() && !failed; ++j) {
      for (std::size_t i = 0; i < disc.size(); ++i) {
        if (current[j].contains(disc[i])) {
          fail({Witness::Kind::gap_hits_discontinuity, k, i + 1, disc[i], 0, j + 1});
          failed = true;
          break;
        }
      }
    }
    if (!failed && k > 0) {
      for (std::size_t i = 0; i < points.size() && !failed; ++i) {
        for (std::size_t j = 0; j < disc.size(); ++j) {
          if (points[i] == disc[j]) {
            fail({Witness::Kind::connection, k, j + 1, disc[j], i + 1, 0});
            failed = true;
            break;
          }
        }
      }
    }
    if (failed) break;

    for (const auto& piece : current) {
      auto pos = std::lower_bound(checked.begin(), checked.end(), piece,
                                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
      if (pos != checked.end() && pos->lo < piece.hi) cert.disjoint = false;
      if (pos != checked.begin() && piece.lo < std::prev(pos)->hi) cert.disjoint = false;
      sum += piece.length();
      checked.insert(pos, piece);
    }
    cert.certified_depth = static_cast<long>(k);
  }

  cert.covered_measure = cert.disjoint ? sum : union_measure(checked);
  Scalar geometric(0);
  Scalar power(1);
  for (long k = 0; k <= cert.certified_depth; ++k) {
    geometric += power;
    power *= g.slope();
  }
  cert.expected_measure = gap.measure() * geometric;

  if (!cert.witness) {
    cert.pass = true;
    const std::uint64_t n = g.branch_count();
    ComplexityProfile geo = geometric_complexity(g, depth);
    cert.complexity_verified = true;
    for (std::size_t k = 1; k <= depth; ++k) {
      if (geo(k) != (n - 1) * k + 1) cert.complexity_verified = false;
    }
  }
  return cert;
}

Certificate certify(const PiecewiseAffineMap& g, std::size_t depth) { return certify(g, g.gap_set(), depth); }

bool replay_witness(const PiecewiseAffineMap& g, const GapSet& gap, const Witness& witness) {
  const auto disc = g.discontinuities();
  if (witness.discontinuity == 0 || witness.discontinuity > disc.size()) return false;
  const Scalar& target = disc[witness.discontinuity - 1];
  if (target != witness.point) return false;
  if (witness.kind == Witness::Kind::connection) {
    if (witness.source == 0 || witness.source > disc.size() || witness.iterate == 0) return false;
    Orbit o = orbit(g, disc[witness.source - 1], witness.iterate);
    return o.points.back() == target;
  }
  if (witness.gap_component == 0 || witness.gap_component > gap.size()) return false;
  std::vector<Interval> pieces{gap.components[witness.gap_component - 1]};
  for (std::size_t k = 0; k < witness.iterate; ++k) {
    std::vector<Interval> next;
    for (const auto& p : pieces) {
      ImageResult img = g.image_interval(p);
      next.insert(next.end(), img.pieces.begin(), img.pieces.end());
    }
    pieces = std::move(next);
  }
  return std::any_of(pieces.begin(), pieces.end(), [&](const Interval& p) { return p.contains(target); });
}

PeriodicityVerdict morse_hedlund_classify(const Word& w) {
  PeriodicityVerdict out;
  out.observed_depth = w.empty() ? 0 : (w.size() - 1) * 2 / 5;
  std::uint64_t previous = factor_count(w, 1);
  for (std::size_t k = 1; k < out.observed_depth; ++k) {
    const std::uint64_t next = factor_count(w, k + 1);
    if (next == previous) {
      out.eventually_periodic = true;
      out.witness_k = k;
      return out;
    }
    previous = next;
  }
  return out;
}

bool is_balanced(const Word& w, Letter letter) {
  std::vector<std::size_t> prefix(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + (w[i] == letter ? 1 : 0);
  for (std::size_t len = 1; len <= w.size(); ++len) {
    std::size_t lo = prefix[len];
    std::size_t hi = lo;
    for (std::size_t i = 1; i + len <= w.size(); ++i) {
      const std::size_t c = prefix[i + len] - prefix[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool is_sturmian_prefix(const Word& w, std::size_t k_max) {
  std::set<Letter> alphabet(w.begin(), w.end());
  if (alphabet.size() != 2) return false;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (factor_count(w, k) != k + 1) return false;
  }
  return is_balanced(w, *alphabet.rbegin());
}

}  // namespace pwc
