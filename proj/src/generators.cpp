#include "cyclo/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "cyclo/error.hpp"

namespace cyclo {

// --- InfiniteWordSource -----------------------------------------------------

std::shared_ptr<const Text> InfiniteWordSource::prefix_text(std::size_t L) const {
  std::shared_ptr<const Text> full;
  {
    std::lock_guard lock(mu_);
    if (!cache_ || cache_->size() < L) {
      const std::size_t want = std::max(L, cache_ ? cache_->size() * 2 : L);
      auto fresh = generate(want);
      if (fresh.size() < L)
        throw std::logic_error("source '" + id_ + "' produced a short prefix");
      cache_ = std::make_shared<const Text>(std::move(fresh));
    }
    full = cache_;
  }
  if (full->size() == L) return full;
  return std::make_shared<const Text>(full->begin(),
                                      full->begin() + static_cast<std::ptrdiff_t>(L));
}

Word InfiniteWordSource::prefix(std::size_t L) const {
  const auto text = prefix_text(L);
  return Word(alphabet_, *text);
}

namespace {
std::mutex g_index_mu;
}

std::shared_ptr<const TextIndex> InfiniteWordSource::index(std::size_t L) const {
  {
    std::lock_guard lock(g_index_mu);
    for (const auto& idx : indexes_)
      if (idx->size() == L) return idx;
  }
  auto built = std::make_shared<const TextIndex>(prefix_text(L), alphabet_.size());
  std::lock_guard lock(g_index_mu);
  for (const auto& idx : indexes_)
    if (idx->size() == L) return idx;
  indexes_.push_back(built);
  if (indexes_.size() > 4) indexes_.erase(indexes_.begin());
  return built;
}

std::optional<std::size_t> InfiniteWordSource::certified_prefix(std::size_t) const {
  return std::nullopt;
}

std::size_t InfiniteWordSource::first_probe(std::size_t n) const {
  return std::bit_ceil(std::max<std::size_t>(4 * n, 1024));
}

std::size_t InfiniteWordSource::next_probe(std::size_t current) const {
  return 2 * current;
}

// --- Morphism / SlotSubstitution -------------------------------------------

Morphism Morphism::parse(const std::vector<std::string>& images,
                         const Alphabet& alphabet) {
  if (images.size() != alphabet.size())
    throw InvalidArgument("morphism needs one image per symbol");
  Morphism m{alphabet, {}};
  for (const auto& img : images) m.images.push_back(Word::parse(img, alphabet));
  return m;
}

Word Morphism::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet))
    throw InvalidArgument("morphism applied across alphabets");
  std::vector<Symbol> out;
  for (const auto a : w.letters()) {
    const auto img = image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(alphabet, std::move(out));
}

bool Morphism::is_uniform() const {
  return std::all_of(images.begin(), images.end(), [&](const Word& w) {
    return w.size() == images.front().size();
  });
}

SlotSubstitution SlotSubstitution::identity(Word u, Word v) {
  const auto k = u.alphabet().size();
  std::vector<Symbol> slot(k);
  for (std::size_t a = 0; a < k; ++a) slot[a] = static_cast<Symbol>(a);
  return {std::move(u), std::move(v), std::move(slot)};
}

SlotSubstitution SlotSubstitution::swap(Word u, Word v) {
  if (u.alphabet().size() != 2)
    throw InvalidArgument("swap slot is defined for binary alphabets");
  return {std::move(u), std::move(v), {1, 0}};
}

bool SlotSubstitution::identity_slot() const noexcept {
  for (std::size_t a = 0; a < slot.size(); ++a)
    if (slot[a] != a) return false;
  return true;
}

Morphism SlotSubstitution::to_morphism() const {
  const auto& alpha = u.alphabet();
  if (!(v.alphabet() == alpha)) throw InvalidArgument("u and v alphabets differ");
  if (slot.size() != alpha.size()) throw InvalidArgument("slot size mismatch");
  std::vector<bool> hit(alpha.size(), false);
  for (const auto s : slot) {
    if (s >= alpha.size() || hit[s]) throw InvalidArgument("slot is not a bijection");
    hit[s] = true;
  }
  Morphism m{alpha, {}};
  for (std::size_t a = 0; a < alpha.size(); ++a)
    m.images.push_back(u + Word(alpha, {slot[a]}) + v);
  return m;
}

// --- fixed points -----------------------------------------------------------

namespace {

constexpr std::uint64_t kLengthCap = std::uint64_t{1} << 40;

class MorphicSource final : public InfiniteWordSource {
 public:
  MorphicSource(std::string id, Morphism m, Symbol seed)
      : InfiniteWordSource(std::move(id), m.alphabet), m_(std::move(m)), seed_(seed) {
    if (seed_ >= m_.alphabet.size()) throw InvalidArgument("seed not in alphabet");
    for (const auto& img : m_.images)
      if (img.empty()) throw InvalidArgument("morphism must be non-erasing");
    const auto& s = m_.image(seed_);
    if (s[0] != seed_ || s.size() < 2)
      throw InvalidArgument("seed is not extendable: image of '" +
                            std::string(1, m_.alphabet.symbol(seed_)) + "' is '" +
                            s.str() + "'");
    // |m^k(seed)| via Parikh vectors.
    std::vector<std::uint64_t> counts(m_.alphabet.size(), 0);
    counts[seed_] = 1;
    for (;;) {
      std::uint64_t len = 0;
      for (const auto c : counts) len += c;
      iterates_.push_back(len);
      if (len > kLengthCap) break;
      std::vector<std::uint64_t> next(counts.size(), 0);
      for (std::size_t a = 0; a < counts.size(); ++a)
        for (const auto b : m_.image(static_cast<Symbol>(a)).letters()) next[b] += counts[a];
      counts = std::move(next);
    }
  }

  std::size_t first_probe(std::size_t n) const override {
    return next_probe(InfiniteWordSource::first_probe(n) - 1);
  }
  std::size_t next_probe(std::size_t current) const override {
    for (const auto len : iterates_)
      if (len > current) return static_cast<std::size_t>(len);
    return 2 * current;
  }
  int stable_rounds() const override { return 2; }
  std::string sufficiency_method() const override { return "morphic-iterates"; }

 protected:
  Text generate(std::size_t L) const override {
    const auto first = m_.image(seed_).letters();
    Text out(first.begin(), first.end());
    out.reserve(L + 16);
    for (std::size_t i = 1; out.size() < L; ++i) {
      const auto img = m_.image(out[i]).letters();
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

 private:
  Morphism m_;
  Symbol seed_;
  std::vector<std::uint64_t> iterates_;
};

// Sorted probe lengths shared by s-adic sources.
std::size_t next_in(const std::vector<std::uint64_t>& lengths, std::size_t current) {
  for (const auto len : lengths)
    if (len > current) return static_cast<std::size_t>(len);
  return 2 * current;
}

template <typename T>
const T& pick(const std::vector<T>& items, Repeat repeat, std::size_t i) {
  if (i < items.size()) return items[i];
  return repeat == Repeat::Last ? items.back() : items[i % items.size()];
}

class SAdicSource final : public InfiniteWordSource {
 public:
  SAdicSource(std::string id, std::vector<SlotSubstitution> seq, Repeat repeat)
      : InfiniteWordSource(std::move(id), seq.empty() ? Alphabet::binary()
                                                      : seq.front().u.alphabet()),
        repeat_(repeat) {
    if (seq.empty()) throw InvalidArgument("empty substitution sequence");
    for (const auto& mu : seq) {
      if (mu.u.empty())
        throw InvalidArgument("s-adic limit needs |u_i| > 0 for every substitution");
      if (!(mu.u.alphabet() == alphabet()))
        throw InvalidArgument("substitutions over different alphabets");
      morphisms_.push_back(mu.to_morphism());
      u_.push_back(mu.u);
    }
    // Stable prefix after n substitutions: |mu_1 o ... o mu_{n-1}(u_n)|.
    std::uint64_t K = 1;
    for (std::size_t i = 0; K <= kLengthCap; ++i) {
      stable_.push_back(K * pick(u_, repeat_, i).size());
      K *= pick(morphisms_, repeat_, i).images.front().size();
    }
  }

  std::size_t first_probe(std::size_t n) const override {
    return next_probe(InfiniteWordSource::first_probe(n) - 1);
  }
  std::size_t next_probe(std::size_t current) const override {
    return next_in(stable_, current);
  }
  int stable_rounds() const override { return 2; }
  std::string sufficiency_method() const override { return "s-adic-iterates"; }

 protected:
  Text generate(std::size_t L) const override {
    std::size_t n = 0;
    while (stable_.at(n) < L) ++n;
    Word w = pick(u_, repeat_, n);
    for (std::size_t i = n; i-- > 0;) w = pick(morphisms_, repeat_, i).apply(w);
    return Text(w.letters().begin(), w.letters().end());
  }

 private:
  Repeat repeat_;
  std::vector<Morphism> morphisms_;
  std::vector<Word> u_;
  std::vector<std::uint64_t> stable_;
};

// --- Toeplitz ---------------------------------------------------------------

class ToeplitzSource final : public InfiniteWordSource {
 public:
  ToeplitzSource(std::string id, Alphabet alphabet, std::vector<ToeplitzPattern> patterns,
                 Repeat repeat)
      : InfiniteWordSource(std::move(id), std::move(alphabet)),
        patterns_(std::move(patterns)),
        repeat_(repeat) {
    if (patterns_.empty()) throw InvalidArgument("no Toeplitz pattern given");
    for (const auto& p : patterns_) {
      bool filled = false;
      for (std::size_t i = 0; i < p.period(); ++i) filled |= p.at(i).has_value();
      if (!filled) throw InvalidArgument("Toeplitz pattern '" + p.str() + "' has no symbol");
    }
  }

 protected:
  Text generate(std::size_t L) const override {
    Text out(L, 0);
    std::vector<std::size_t> holes(L);
    for (std::size_t i = 0; i < L; ++i) holes[i] = i;
    const std::size_t tail_period = repeat_ == Repeat::Last ? 1 : patterns_.size();
    std::size_t idle = 0;
    for (std::size_t stage = 0; !holes.empty(); ++stage) {
      const auto& pattern = pick(patterns_, repeat_, stage);
      std::vector<std::size_t> left;
      for (std::size_t k = 0; k < holes.size(); ++k) {
        if (const auto s = pattern.at(k))
          out[holes[k]] = *s;
        else
          left.push_back(holes[k]);
      }
      idle = left.size() == holes.size() ? idle + 1 : 0;
      if (stage >= patterns_.size() && idle >= tail_period)
        throw InvalidArgument("Toeplitz patterns never fill position " +
                              std::to_string(left.front() + 1));
      holes = std::move(left);
    }
    return out;
  }

 private:
  std::vector<ToeplitzPattern> patterns_;
  Repeat repeat_;
};

// --- paperfolding -----------------------------------------------------------

// tau(w): alternating 0101.. (tau) or 1010.. (tau_bar) interleaved with w.
Text fold(const Text& w, Fold f) {
  Text out(2 * w.size());
  const Symbol first = f == Fold::Tau ? 0 : 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[2 * i] = static_cast<Symbol>(first ^ (i & 1));
    out[2 * i + 1] = w[i];
  }
  return out;
}

class PaperfoldingSource final : public InfiniteWordSource {
 public:
  PaperfoldingSource(std::string id, FoldSequence folds)
      : InfiniteWordSource(std::move(id), Alphabet::binary()), folds_(std::move(folds)) {
    if (folds_.folds.empty()) throw InvalidArgument("empty fold sequence");
  }

 protected:
  Text generate(std::size_t L) const override {
    // tau_0 o ... o tau_n(x) does not depend on x in its first 2^(n+1)-1
    // letters.
    std::size_t n = 0;
    while ((std::size_t{1} << (n + 1)) - 1 < L) ++n;
    Text x{0, 0};
    for (std::size_t i = n + 1; i-- > 0;) x = fold(x, folds_.at(i));
    x.resize(L);
    return x;
  }

 private:
  FoldSequence folds_;
};

// --- mechanical words -------------------------------------------------------

class MechanicalSource final : public InfiniteWordSource {
 public:
  MechanicalSource(std::string id, Slope slope)
      : InfiniteWordSource(std::move(id), Alphabet::binary()), slope_(std::move(slope)) {
    slope_.validate();
  }

  // Every length-n factor starts among the first q_{k+2} + q_{k+1}
  // positions, q_k being the largest convergent denominator <= n: those
  // orbit points leave gaps below ||q_{k+1} a||, and each of the n+1 arcs
  // that determine a factor is at least ||q_k a|| long.
  std::optional<std::size_t> certified_prefix(std::size_t n) const override {
    if (n == 0) return 1;
    const auto conv = slope_.convergents(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < conv.size(); ++i)
      if (conv[i].q <= n) k = i;
    auto more = slope_.convergents(conv.back().q);
    while (more.size() < k + 3) more = slope_.convergents(more.back().q);
    return static_cast<std::size_t>(n + more[k + 2].q + more[k + 1].q);
  }
  std::string sufficiency_method() const override { return "rotation-certificate"; }

 protected:
  Text generate(std::size_t L) const override {
    const bool characteristic = !slope_.intercept.has_value();
    const std::uint64_t a = characteristic ? 0 : slope_.intercept->num();
    const std::uint64_t b = characteristic ? 1 : slope_.intercept->den();
    const std::size_t j0 = characteristic ? 1 : 0;

    auto conv = slope_.convergents(L + 2);
    std::size_t m = conv.size() - 1;
    for (;;) {
      while (conv.size() < m + 2) conv = slope_.convergents(conv.back().q);
      const auto lo = conv[m], hi = conv[m + 1];
      const auto floor_at = [&](const Convergent& c, std::size_t j) {
        using U = unsigned __int128;
        return (U(j) * c.p * b + U(a) * c.q) / (U(c.q) * b);
      };
      Text out(L);
      bool exact = true;
      auto prev = floor_at(lo, j0);
      if (prev != floor_at(hi, j0)) exact = false;
      for (std::size_t k = 0; exact && k < L; ++k) {
        const auto cur = floor_at(lo, j0 + k + 1);
        if (cur != floor_at(hi, j0 + k + 1)) {
          exact = false;
          break;
        }
        out[k] = static_cast<Symbol>(cur - prev);
        prev = cur;
      }
      if (exact) return out;
      ++m;
    }
  }

 private:
  Slope slope_;
};

class PeriodicSource final : public InfiniteWordSource {
 public:
  PeriodicSource(std::string id, Word pre, Word period)
      : InfiniteWordSource(std::move(id), period.alphabet()),
        pre_(std::move(pre)),
        period_(std::move(period)) {
    if (period_.empty()) throw InvalidArgument("ultimately_periodic needs a non-empty period");
    if (!(pre_.alphabet() == period_.alphabet()))
      throw InvalidArgument("preperiod and period over different alphabets");
  }

  std::optional<std::size_t> certified_prefix(std::size_t n) const override {
    return std::max<std::size_t>(1, pre_.size() + period_.size() + n - (n > 0 ? 1 : 0));
  }
  std::string sufficiency_method() const override { return "periodic-certificate"; }
  std::optional<std::pair<std::size_t, std::size_t>> periodicity() const override {
    return std::pair{pre_.size(), period_.size()};
  }

 protected:
  Text generate(std::size_t L) const override {
    Text out;
    out.reserve(L);
    for (std::size_t i = 0; i < L && i < pre_.size(); ++i) out.push_back(pre_[i]);
    for (std::size_t i = 0; out.size() < L; ++i) out.push_back(period_[i % period_.size()]);
    return out;
  }

 private:
  Word pre_;
  Word period_;
};

std::string or_default(std::string id, const char* fallback) {
  return id.empty() ? std::string(fallback) : id;
}

}  // namespace

Source fixed_point(const Morphism& m, Symbol seed, std::string id) {
  return std::make_shared<MorphicSource>(or_default(std::move(id), "fixed-point"), m, seed);
}

Source fixed_point(const SlotSubstitution& m, Symbol seed, std::string id) {
  return fixed_point(m.to_morphism(), seed, std::move(id));
}

Source s_adic_limit(std::vector<SlotSubstitution> seq, Repeat repeat, std::string id) {
  return std::make_shared<SAdicSource>(or_default(std::move(id), "s-adic"), std::move(seq),
                                       repeat);
}

Source toeplitz(std::vector<ToeplitzPattern> patterns, Repeat repeat, std::string id) {
  return std::make_shared<ToeplitzSource>(or_default(std::move(id), "toeplitz"),
                                          Alphabet::binary(), std::move(patterns), repeat);
}

Source paperfolding(FoldSequence folds, std::string id) {
  return std::make_shared<PaperfoldingSource>(or_default(std::move(id), "paperfolding"),
                                              std::move(folds));
}

Word paperfolding_stage(const FoldSequence& folds, std::size_t n) {
  Text x{0, 0};
  for (std::size_t i = n; i-- > 0;) x = fold(x, folds.at(i));
  return Word(Alphabet::binary(), std::move(x));
}

Source mechanical(Slope slope, std::string id) {
  return std::make_shared<MechanicalSource>(or_default(std::move(id), "mechanical"),
                                            std::move(slope));
}

Source ultimately_periodic(Word preperiod, Word period, std::string id) {
  return std::make_shared<PeriodicSource>(or_default(std::move(id), "ultimately-periodic"),
                                          std::move(preperiod), std::move(period));
}

// --- ToeplitzPattern / FoldSequence ----------------------------------------

ToeplitzPattern ToeplitzPattern::parse(std::string_view pattern, const Alphabet& alphabet) {
  if (pattern.empty()) throw InvalidArgument("empty Toeplitz pattern");
  ToeplitzPattern p;
  p.text_ = std::string(pattern);
  for (const char c : pattern) {
    if (c == '?') {
      p.cells_.push_back(-1);
      continue;
    }
    const auto idx = alphabet.index_of(c);
    if (!idx) throw InvalidArgument(std::string("symbol '") + c + "' not in alphabet");
    p.cells_.push_back(*idx);
  }
  return p;
}

std::optional<Symbol> ToeplitzPattern::at(std::size_t i) const {
  const int c = cells_[i % cells_.size()];
  if (c < 0) return std::nullopt;
  return static_cast<Symbol>(c);
}

Fold FoldSequence::at(std::size_t i) const { return pick(folds, repeat, i); }

// --- Slope ------------------------------------------------------------------

Slope Slope::periodic(std::vector<std::uint64_t> head, std::vector<std::uint64_t> tail) {
  Slope s{std::move(head), std::move(tail), std::nullopt};
  s.validate();
  return s;
}

Slope Slope::extend_with_ones(std::vector<std::uint64_t> head) {
  return periodic(std::move(head), {1});
}

Slope Slope::fibonacci() { return periodic({2}, {1}); }

void Slope::validate() const {
  if (tail.empty())
    throw InvalidArgument("slope has a finite continued fraction (rational); "
                          "use ultimately_periodic or extend_with_ones");
  for (const auto a : head)
    if (a == 0) throw InvalidArgument("partial quotients must be positive");
  for (const auto a : tail)
    if (a == 0) throw InvalidArgument("partial quotients must be positive");
  if (intercept && intercept->num() >= intercept->den())
    throw InvalidArgument("intercept must lie in [0,1)");
}

std::uint64_t Slope::quotient(std::size_t i) const {
  if (i == 0) return 0;
  if (i <= head.size()) return head[i - 1];
  return tail[(i - head.size() - 1) % tail.size()];
}

std::vector<Convergent> Slope::convergents(std::uint64_t q_min) const {
  std::vector<Convergent> out{{0, 1}};
  unsigned __int128 p2 = 1, q2 = 0, p1 = 0, q1 = 1;
  for (std::size_t i = 1; out.back().q <= q_min; ++i) {
    const auto a = quotient(i);
    const unsigned __int128 p = a * p1 + p2, q = a * q1 + q2;
    if (q > std::numeric_limits<std::uint64_t>::max() / 1024)
      throw InvalidArgument("convergent denominators overflow");
    out.push_back({static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

double Slope::value() const {
  const auto c = convergents(std::uint64_t{1} << 30).back();
  return static_cast<double>(c.p) / static_cast<double>(c.q);
}

std::string Slope::str() const {
  std::ostringstream os;
  os << "[0;";
  for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i];
  os << (head.empty() ? "(" : ",(");
  for (std::size_t i = 0; i < tail.size(); ++i) os << (i ? "," : "") << tail[i];
  os << ")]";
  if (intercept) os << "+" << intercept->str();
  return os.str();
}

}  // namespace cyclo
