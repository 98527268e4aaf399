#include "cyclo/sturmian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

void require_binary(const Word& w, const char* what) {
  if (w.alphabet().size() != 2) throw InvalidArgument(std::string(what) + " needs a binary word");
}

bool is_letter_power(const Word& w) {
  const auto l = w.letters();
  return std::all_of(l.begin(), l.end(), [&](Symbol a) { return a == l.front(); });
}

Word repeat(Symbol a, std::size_t k) {
  return Word(Alphabet::binary(), std::vector<Symbol>(k, a));
}

}  // namespace

std::optional<CentralWord> is_central(const Word& w) {
  require_binary(w, "is_central");
  const std::size_t n = w.size();
  if (n == 0) return CentralWord{w, 1, 1};
  auto candidates = periods(w);
  candidates.push_back(n + 1);  // vacuous period
  const auto has = [&](std::size_t p) {
    return std::find(candidates.begin(), candidates.end(), p) != candidates.end();
  };
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const std::size_t p = *it;
    if (p > n + 1) continue;
    const std::size_t q = n + 2 - p;
    if (q > p) break;
    if (has(q) && std::gcd(p, q) == 1) return CentralWord{w, p, q};
  }
  return std::nullopt;
}

std::optional<std::pair<Word, Word>> central_decomposition(const Word& w) {
  if (!is_central(w)) throw InvalidArgument("central_decomposition: " + w.str() + " is not central");
  if (is_letter_power(w)) return std::nullopt;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    if (w[i] != 0 || w[i + 1] != 1) continue;
    const Word p1 = w.factor(0, i);
    const Word p2 = w.factor(i + 2, n - i - 2);
    if (p2 + Word::parse("10") + p1 == w) return std::pair{p1, p2};
  }
  throw std::logic_error("central word without decomposition: " + w.str());
}

Word christoffel_word(std::uint64_t r, std::uint64_t s) {
  if (r == 0 || s == 0 || std::gcd(r, s) != 1)
    throw InvalidArgument("christoffel_word needs coprime r, s >= 1");
  const unsigned __int128 len = static_cast<unsigned __int128>(r) + s;
  std::vector<Symbol> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (unsigned __int128 k = 0; k < len; ++k)
    letters.push_back(static_cast<Symbol>((k + 1) * s / len - k * s / len));
  return Word(Alphabet::binary(), std::move(letters));
}

Word ChristoffelArray::column(std::size_t j) const {
  std::vector<Symbol> col;
  col.reserve(rows.size());
  for (const auto& row : rows) col.push_back(row[j]);
  return Word(Alphabet::binary(), std::move(col));
}

std::vector<std::string> ChristoffelArray::violations() const {
  std::vector<std::string> out;
  const std::size_t m = static_cast<std::size_t>(r + s);
  if (rows.size() != m) {
    out.emplace_back("row-count");
    return out;
  }
  if (!std::is_sorted(rows.begin(), rows.end()) ||
      std::adjacent_find(rows.begin(), rows.end()) != rows.end())
    out.emplace_back("rows-sorted");
  if (!std::all_of(rows.begin(), rows.end(), [&](const Word& w) {
        return w.size() == m && are_conjugate(w, rows.front());
      }))
    out.emplace_back("rows-conjugate");
  for (const auto& row : rows) {
    const auto pv = parikh(row);
    if (pv[0] != r || pv[1] != s) {
      out.emplace_back("row-parikh");
      break;
    }
  }
  if (column(0) != repeat(0, r) + repeat(1, s)) out.emplace_back("first-column");
  if (column(m - 1) != repeat(1, s) + repeat(0, r)) out.emplace_back("last-column");
  for (std::size_t j = 1; j < m; ++j)
    if (!are_conjugate(column(j), column(0))) {
      out.emplace_back("columns-conjugate");
      break;
    }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Word &a = rows[i], &b = rows[i + 1];
    std::vector<std::size_t> diff;
    for (std::size_t j = 0; j < m; ++j)
      if (a[j] != b[j]) diff.push_back(j);
    const bool swap = diff.size() == 2 && diff[1] == diff[0] + 1 &&
                      a[diff[0]] == b[diff[1]] && a[diff[1]] == b[diff[0]];
    if (!swap) {
      out.emplace_back("adjacent-swap");
      break;
    }
  }
  return out;
}

std::string ChristoffelArray::str() const {
  std::ostringstream os;
  for (const auto& row : rows) os << row.str() << '\n';
  return os.str();
}

ChristoffelArray christoffel_array(std::uint64_t r, std::uint64_t s) {
  const Word w = christoffel_word(r, s);
  ChristoffelArray a{r, s, {}};
  for (std::size_t k = 0; k < w.size(); ++k) a.rows.push_back(rotate(w, k));
  std::sort(a.rows.begin(), a.rows.end());
  return a;
}

FactorSlice sturmian_factor_slice(const Slope& s, std::size_t n, const Budget& budget) {
  const auto src = mechanical(s);
  auto slice = factors(*src, n, budget);
  if (slice.size() != n + 1)
    throw std::logic_error("mechanical word of slope " + s.str() + " has " +
                           std::to_string(slice.size()) + " factors of length " +
                           std::to_string(n));
  return slice;
}

std::vector<CentralWord> bispecial_factors(const Slope& s, std::size_t N,
                                           const Budget& budget) {
  const auto src = mechanical(s);
  std::vector<CentralWord> out;
  for (std::size_t n = 0; n <= N; ++n) {
    for (const auto& w : special_factors(*src, n, Side::Both, budget)) {
      // p = q = 0 marks a bispecial factor that is not central.
      out.push_back(is_central(w).value_or(CentralWord{w, 0, 0}));
    }
  }
  return out;
}

std::vector<std::size_t> bispecial_lengths(const Slope& s, std::size_t N, const Budget& budget) {
  std::vector<std::size_t> out;
  for (const auto& c : bispecial_factors(s, N, budget)) out.push_back(c.word.size());
  return out;
}

bool follows_period_rule(const std::vector<CentralWord>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto &a = chain[i], &b = chain[i + 1];
    if (a.p == 0 || b.p == 0) return false;
    if (b.p != a.p + a.q || (b.q != a.p && b.q != a.q)) return false;
  }
  return true;
}

Rational slope_of(const Word& w) {
  require_binary(w, "slope_of");
  if (w.empty()) throw InvalidArgument("slope_of the empty word");
  const auto ones = static_cast<std::uint64_t>(std::count(w.letters().begin(), w.letters().end(), 1));
  return Rational(ones, w.size());
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m, old_t = 1, t = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r != 1) return std::nullopt;
  old_t %= static_cast<__int128>(m);
  if (old_t < 0) old_t += m;
  return static_cast<std::uint64_t>(old_t);
}

}  // namespace cyclo
