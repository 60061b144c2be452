#include "pisot/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "pisot/normalizer.hpp"

namespace pisot {
namespace oracle {

bool in_zero_greedy(const NumerationSystem& ns, const std::vector<int>& digits) {
  std::size_t start = 0;
  while (start < digits.size() && digits[start] == 0) ++start;
  const int m = int(digits.size() - start);
  if (m == 0) return true;
  const int sign = digits[start] > 0 ? 1 : -1;
  BigInt sfx = 0;
  for (int p = m - 1; p >= 0; --p) {
    const int dg = sign * digits[start + p];
    if (dg < 0) return false;  // mixed signs are never a normal form
    sfx += BigInt(dg) * ns.term(m - 1 - p);
    if (sfx >= ns.term(m - p)) return false;  // suffix not greedy-maximal
  }
  return true;
}

bool pair_normalizes(const SystemTuple& systems, const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.dim != int(systems.size()) || v.dim != u.dim) return false;
  for (int j = 0; j < u.dim; ++j) {
    std::vector<int> uj = word_track(u, j), vj = word_track(v, j);
    if (systems[j].value(uj) != systems[j].value(vj)) return false;
    if (!in_zero_greedy(systems[j], vj)) return false;
  }
  return true;
}

std::string format_pair(const Word& u, const Word& v) {
  return "(" + word_to_display(u) + ", " + word_to_display(v) + ")";
}

namespace {

std::vector<Letter> second_blocks(const SystemTuple& systems, bool signed_second) {
  std::vector<std::vector<int>> tracks;
  for (const auto& ns : systems) {
    std::vector<int> t;
    int b = ns.digit_bound();
    for (int x = signed_second ? -b : 0; x <= b; ++x) t.push_back(x);
    tracks.push_back(std::move(t));
  }
  std::vector<Letter> out = {{}};
  for (const auto& t : tracks) {
    std::vector<Letter> next;
    for (const auto& prefix : out)
      for (int x : t) {
        Letter l = prefix;
        l.push_back(x);
        next.push_back(std::move(l));
      }
    out = std::move(next);
  }
  return out;
}

Letter concat_blocks(const Letter& a, const Letter& b) {
  Letter l = a;
  l.insert(l.end(), b.begin(), b.end());
  return l;
}

}  // namespace

std::optional<std::string> check_normalizer_exhaustive(const MultiTapeDFA& n,
                                                       const SystemTuple& systems, int max_len,
                                                       const std::vector<Letter>& first_blocks,
                                                       bool signed_second) {
  const int d = int(systems.size());
  require(n.dim == 2 * d, "pair automaton width differs from 2 * number of systems");
  if (!n.is_final[n.initial]) return std::string("(empty, empty): rejected, but 0 normalizes to 0");

  /* synthesized full pair alphabet; letters the automaton never saw are dead */
  struct PairLetter {
    Letter a, b;
    int automaton_idx;
  };
  std::vector<PairLetter> pairs;
  for (const auto& a : first_blocks)
    for (const auto& b : second_blocks(systems, signed_second))
      pairs.push_back({a, b, n.letter_index(concat_blocks(a, b))});
  const int L = int(pairs.size());

  std::vector<std::vector<long long>> terms(d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i <= max_len; ++i) {
      BigInt t = systems[j].term(i);
      require(t < BigInt(1LL << 42), "terms too large for the long-long sweep");
      terms[j].push_back(t.convert_to<long long>());
    }

  std::optional<std::string> bad;
  std::vector<int> chosen(std::size_t(std::max(max_len, 1)), 0);
  for (int len = 1; len <= max_len && !bad; ++len) {
    std::vector<std::vector<long long>> upart(len + 1, std::vector<long long>(d, 0));
    std::vector<std::vector<long long>> vpart = upart;
    std::vector<int> states(len + 1, n.initial);

    auto v_zero_greedy = [&](int j) {
      int start = 0;
      while (start < len && pairs[chosen[start]].b[j] == 0) ++start;
      if (start == len) return true;
      const int sign = pairs[chosen[start]].b[j] > 0 ? 1 : -1;
      const int m = len - start;
      long long sfx = 0;
      for (int p = m - 1; p >= 0; --p) {
        const int dg = sign * pairs[chosen[start + p]].b[j];
        if (dg < 0) return false;
        sfx += (long long)dg * terms[j][m - 1 - p];
        if (sfx >= terms[j][m - p]) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
      if (bad) return;
      if (depth == len) {
        const bool acc = states[len] >= 0 && n.is_final[states[len]];
        bool orc = true;
        for (int j = 0; j < d && orc; ++j)
          orc = upart[len][j] == vpart[len][j] && v_zero_greedy(j);
        if (acc != orc) {
          Word u(d), v(d);
          for (int p = 0; p < len; ++p) {
            u.letters.push_back(pairs[chosen[p]].a);
            v.letters.push_back(pairs[chosen[p]].b);
          }
          bad = format_pair(u, v) + (acc ? ": accepted, oracle rejects" : ": rejected, oracle accepts");
        }
        return;
      }
      for (int li = 0; li < L && !bad; ++li) {
        chosen[depth] = li;
        for (int j = 0; j < d; ++j) {
          upart[depth + 1][j] = upart[depth][j] + (long long)pairs[li].a[j] * terms[j][len - 1 - depth];
          vpart[depth + 1][j] = vpart[depth][j] + (long long)pairs[li].b[j] * terms[j][len - 1 - depth];
        }
        const int st = states[depth];
        states[depth + 1] =
            (st < 0 || pairs[li].automaton_idx < 0) ? -1 : n.next[st][pairs[li].automaton_idx];
        self(self, depth + 1);
      }
    };
    rec(rec, 0);
  }
  return bad;
}

std::optional<std::string> check_normalizer_sampled(const MultiTapeDFA& n,
                                                    const SystemTuple& systems, int max_len,
                                                    const std::vector<Letter>& first_blocks,
                                                    bool signed_second, int samples,
                                                    unsigned long long seed) {
  const int d = int(systems.size());
  require(n.dim == 2 * d, "pair automaton width differs from 2 * number of systems");
  std::mt19937_64 rng(seed);
  const std::vector<Letter> seconds = second_blocks(systems, signed_second);
  auto pick = [&](const std::vector<Letter>& from) { return from[rng() % from.size()]; };

  auto disagreement = [&](const Word& u, const Word& v) -> std::optional<std::string> {
    Word pair(2 * d);
    for (int p = 0; p < u.size(); ++p) pair.letters.push_back(concat_blocks(u.letters[p], v.letters[p]));
    const bool acc = n.accepts(pair);
    const bool orc = pair_normalizes(systems, u, v);
    if (acc == orc) return std::nullopt;
    return format_pair(u, v) + (acc ? ": accepted, oracle rejects" : ": rejected, oracle accepts");
  };

  for (int len = 1; len <= max_len; ++len) {
    for (int s = 0; s < samples; ++s) {
      Word u(d), v(d);
      for (int p = 0; p < len; ++p) {
        u.letters.push_back(pick(first_blocks));
        v.letters.push_back(pick(seconds));
      }
      /* uniform pair */
      if (auto r = disagreement(u, v)) return r;
      /* constructed normal form of the same u, when it fits the length */
      Word nf = normalize_word(systems, u);
      if (nf.size() <= len) {
        Word v0 = prepend_zeros(nf, len - nf.size());
        if (auto r = disagreement(u, v0)) return r;
        /* one-digit near-miss of the normal form */
        Word vm = v0;
        int p = int(rng() % std::size_t(len));
        int j = int(rng() % std::size_t(d));
        int b = systems[j].digit_bound();
        int lo = signed_second ? -b : 0;
        int delta = 1 + int(rng() % std::size_t(2 * b));
        vm.letters[p][j] = lo + (vm.letters[p][j] - lo + delta) % (2 * b + 1 - (signed_second ? 0 : b));
        if (auto r = disagreement(u, vm)) return r;
      }
    }
  }
  return std::nullopt;
}

long long count_second_blocks(const MultiTapeDFA& n, const Word& u) {
  const int d = u.dim;
  require(n.dim == 2 * d, "pair automaton width differs from first-block width");
  std::vector<long long> cnt(n.num_states(), 0);
  cnt[n.initial] = 1;
  for (const auto& a : u.letters) {
    std::vector<long long> nxt(n.num_states(), 0);
    for (int li = 0; li < n.num_letters(); ++li) {
      if (!std::equal(a.begin(), a.end(), n.alphabet[li].begin())) continue;
      for (int q = 0; q < n.num_states(); ++q)
        if (cnt[q] && n.next[q][li] >= 0) nxt[n.next[q][li]] += cnt[q];
    }
    cnt = std::move(nxt);
  }
  long long total = 0;
  for (int q = 0; q < n.num_states(); ++q)
    if (n.is_final[q]) total += cnt[q];
  return total;
}

}  // namespace oracle

/* ================================================================== */

namespace {

using Check = std::function<std::optional<std::string>()>;

void add_check(std::vector<CheckResult>& out, const std::string& name, const Check& body) {
  CheckResult r;
  r.name = name;
  try {
    if (auto fail = body()) {
      r.pass = false;
      r.detail = *fail;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

template <class KTo>
LinearRepresentation<KTo> embed_from_nat(const LinearRepresentation<NatSemiring>& g) {
  LinearRepresentation<KTo> out;
  out.dim = g.dim;
  out.r = g.r;
  out.alphabet = g.alphabet;
  auto conv = [](const Matrix<NatSemiring>& m) {
    Matrix<KTo> z(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) z.a[i] = KTo::parse(m.a[i].str());
    return z;
  };
  out.lambda = conv(g.lambda);
  out.gamma = conv(g.gamma);
  for (const auto& m : g.mu) out.mu.push_back(conv(m));
  return out;
}

std::vector<Letter> dim1_letters(const std::vector<int>& digits) {
  std::vector<Letter> out;
  for (int d : digits) out.push_back({d});
  return out;
}

/* Shared lazily-built artifacts; any build error surfaces in the dependent
 * checks rather than aborting the whole run. */
struct Ctx {
  VerificationConfig cfg;
  NumerationSystem phi2 = fixture_phi2();
  NumerationSystem zeck = fixture_zeckendorf();
  LinearRepresentation<NatSemiring> g;
  std::vector<Letter> a012 = dim1_letters({0, 1, 2});

  std::optional<MultiTapeDFA> base_n_, ext_n_, multi_n_;
  std::optional<StarProduct<NatSemiring>> sp_;
  std::optional<std::pair<LinearRepresentation<NatSemiring>, ConversionReport>> conv_;

  const MultiTapeDFA& base_n() {
    if (!base_n_) base_n_ = build_base_normalizer(phi2, {0, 1, 2});
    return *base_n_;
  }
  const MultiTapeDFA& ext_n() {
    if (!ext_n_) ext_n_ = build_extended_normalizer(phi2, {-2, -1, 0, 1, 2});
    return *ext_n_;
  }
  const MultiTapeDFA& multi_n() {
    if (!multi_n_) {
      std::vector<Letter> a;
      for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) a.push_back({x, y});
      multi_n_ = build_multidim_normalizer({phi2, phi2}, a);
    }
    return *multi_n_;
  }
  const StarProduct<NatSemiring>& sp() {
    if (!sp_) {
      MultiTapeDFA n = build_multidim_normalizer({phi2}, a012);
      sp_ = star_product(n, initial_normal_form(linrep_to_wfa(g)));
    }
    return *sp_;
  }
  const std::pair<LinearRepresentation<NatSemiring>, ConversionReport>& conv() {
    if (!conv_) conv_ = greedy_to_value_linrep(g, {phi2}, a012);
    return *conv_;
  }
};

}  // namespace

std::vector<CheckResult> run_verification(
    const VerificationConfig& config, const LinearRepresentation<NatSemiring>* series_override) {
  Ctx ctx;
  ctx.cfg = config;
  ctx.g = series_override ? *series_override : fixture_series_phi2<NatSemiring>();
  const int L = std::max(1, config.max_word_length);
  const int Lpairs = std::min(L, 6);

  std::vector<CheckResult> out;

  add_check(out, "semiring-axioms", [&]() -> std::optional<std::string> {
    auto run = [](const std::string& which, const AxiomsReport& r) -> std::optional<std::string> {
      if (!r.pass) return which + ": " + r.detail;
      return std::nullopt;
    };
    {
      std::vector<NatSemiring::Value> s = {0, 1, 2, 3, 5, 7};
      if (auto f = run("nat", axioms_check<NatSemiring>(s))) return f;
    }
    {
      std::vector<IntSemiring::Value> s = {0, 1, -1, 2, -3, 5};
      if (auto f = run("int", axioms_check<IntSemiring>(s))) return f;
    }
    {
      std::vector<RatSemiring::Value> s = {0, 1, -1, RatSemiring::parse("1/2"),
                                           RatSemiring::parse("-2/3"), RatSemiring::parse("7/5")};
      if (auto f = run("rat", axioms_check<RatSemiring>(s))) return f;
    }
    {
      std::vector<BoolSemiring::Value> s = {false, true};
      if (auto f = run("bool", axioms_check<BoolSemiring>(s))) return f;
    }
    {
      std::vector<TropicalSemiring::Value> s = {TropicalSemiring::zero(), TropicalSemiring::one(),
                                                TropicalSemiring::from_int(2),
                                                TropicalSemiring::from_int(-3),
                                                TropicalSemiring::from_int(7)};
      if (auto f = run("tropical", axioms_check<TropicalSemiring>(s))) return f;
    }
    return std::nullopt;
  });

  add_check(out, "numeration-terms", [&]() -> std::optional<std::string> {
    for (const NumerationSystem* ns : {&ctx.phi2, &ctx.zeck}) {
      if (ns->term(0) != 1) return ns->name() + ": U(0) != 1";
      for (int i = 0; i + 1 < 40; ++i)
        if (ns->term(i) >= ns->term(i + 1)) return ns->name() + ": terms not increasing";
      const auto& c = ns->recurrence();
      for (int n = 0; n + ns->order() < 40; ++n) {
        BigInt expect = 0;
        for (int i = 0; i < ns->order(); ++i) expect += BigInt(c[i]) * ns->term(n + ns->order() - 1 - i);
        if (expect != ns->term(n + ns->order()))
          return ns->name() + ": recurrence fails at index " + std::to_string(n);
      }
      if (!ns->quotients_stabilized()) return ns->name() + ": term quotients did not stabilize";
    }
    if (ctx.phi2.digit_bound() != 2) return "phi2 digit bound: expected 2";
    if (ctx.zeck.digit_bound() != 1) return "zeckendorf digit bound: expected 1";
    return std::nullopt;
  });

  add_check(out, "greedy-round-trip", [&]() -> std::optional<std::string> {
    for (const NumerationSystem* ns : {&ctx.phi2, &ctx.zeck}) {
      if (!ns->greedy_rep(0).empty()) return ns->name() + ": rep(0) not empty";
      for (long long n = 0; n < 10000; ++n) {
        std::vector<int> rep = ns->greedy_rep(n);
        if (ns->value(rep) != n)
          return ns->name() + ": value(rep(" + std::to_string(n) + ")) mismatch";
        if (!ns->is_greedy(rep)) return ns->name() + ": rep(" + std::to_string(n) + ") not greedy";
        if (!rep.empty() && rep[0] == 0) return ns->name() + ": leading zero in rep";
      }
    }
    return std::nullopt;
  });

  add_check(out, "pisot-verdicts", [&]() -> std::optional<std::string> {
    if (!ctx.phi2.pisot_check().ok()) return "phi2: expected pass";
    if (!ctx.zeck.pisot_check().ok()) return "zeckendorf: expected pass";
    NumerationSystem sq("x2-minus-4", {0, 4}, {1, 3});
    if (sq.pisot_check().status != PisotVerdict::Status::fail) return "X^2-4: expected fail";
    return std::nullopt;
  });

  add_check(out, "normalization-examples", [&]() -> std::optional<std::string> {
    SystemTuple one = {ctx.phi2}, two = {ctx.phi2, ctx.phi2};
    Word mm = Word(1, {{-2}, {-2}});
    if (normalize_word(one, mm) != Word(1, {{-1}, {0}, {0}})) return "normalize(-2 -2) != -1 0 0";
    Word pair22_10 = Word(2, {{-2, 1}, {-2, 0}});
    Word expect = Word(2, {{-1, 0}, {0, 1}, {0, 0}});
    if (normalize_word(two, pair22_10) != expect) return "normalize((-2-2, 10)) mismatch";
    if (!normalize_word(one, Word(1, {{0}, {0}, {0}, {0}})).empty()) return "normalize(0000) != empty";
    if (delay(one, Word(1, {{1}, {-2}})) != -1) return "delay(1 -2) != -1";
    if (delay(one, word_from_digits("22")) != 1) return "delay(22) != 1";
    if (delay(one, word_from_digits("10")) != 0) return "delay(10) != 0";
    if (delay(two, Word(2, {{2, 1}, {2, 0}})) != 1) return "delay((22,10)) != 1";
    if (delay(two, Word(2, {{0, 0}, {2, 1}, {2, 0}})) != 0) return "delay((022,010)) != 0";
    return std::nullopt;
  });

  add_check(out, "normalizer-structure", [&]() -> std::optional<std::string> {
    struct Item {
      const char* which;
      const MultiTapeDFA* n;
      int d;
    };
    const Item items[] = {{"base", &ctx.base_n(), 1}, {"extended", &ctx.ext_n(), 1},
                          {"multidim", &ctx.multi_n(), 2}};
    for (const auto& item : items) {
      const MultiTapeDFA& n = *item.n;
      if (n.tape_split != item.d) return std::string(item.which) + ": wrong tape split";
      if (!n.is_final[n.initial]) return std::string(item.which) + ": initial state not final";
      std::map<std::tuple<int, Letter, int>, Letter> seen;
      for (int q = 0; q < n.num_states(); ++q)
        for (int li = 0; li < n.num_letters(); ++li) {
          int t = n.next[q][li];
          if (t < 0) continue;
          Letter a(n.alphabet[li].begin(), n.alphabet[li].begin() + item.d);
          Letter b(n.alphabet[li].begin() + item.d, n.alphabet[li].end());
          auto [it, inserted] = seen.emplace(std::make_tuple(q, a, t), b);
          if (!inserted && it->second != b)
            return std::string(item.which) + ": two second blocks between states " +
                   std::to_string(q) + " and " + std::to_string(t);
        }
    }
    return std::nullopt;
  });

  add_check(out, "normalizer-oracle-phi2", [&]() -> std::optional<std::string> {
    return oracle::check_normalizer_exhaustive(ctx.base_n(), {ctx.phi2}, Lpairs,
                                               ctx.a012, false);
  });

  add_check(out, "normalizer-oracle-zeckendorf", [&]() -> std::optional<std::string> {
    MultiTapeDFA n = build_base_normalizer(ctx.zeck, {0, 1});
    return oracle::check_normalizer_exhaustive(n, {ctx.zeck}, std::min(L + 1, 8),
                                               dim1_letters({0, 1}), false);
  });

  add_check(out, "normalizer-families", [&]() -> std::optional<std::string> {
    /* one-track families around nu(22) = 100 */
    for (int l = 0; l <= 2; ++l) {
      auto pads = [&](const std::string& u, int ku, const std::string& v, int kv) {
        Word uu = prepend_zeros(word_from_digits(u), ku);
        Word vv = prepend_zeros(word_from_digits(v), kv);
        Word pair(2);
        for (int p = 0; p < uu.size(); ++p)
          pair.letters.push_back({uu.letters[p][0], vv.letters[p][0]});
        return pair;
      };
      if (!ctx.base_n().accepts(pads("22", l + 1, "100", l)))
        return "base family 1 rejected at l=" + std::to_string(l);
      if (!ctx.base_n().accepts(pads("022", l, "100", l)))
        return "base family 2 rejected at l=" + std::to_string(l);
      if (!ctx.base_n().accepts(pads("0022", l, "100", l + 1)))
        return "base family 3 rejected at l=" + std::to_string(l);
    }
    /* signed pairs */
    if (!ctx.ext_n().accepts(Word(2, {{0, -1}, {-2, 0}, {-2, 0}})))
      return "extended: (0 -2 -2, -1 0 0) rejected";
    if (!ctx.ext_n().accepts(Word(2, {{1, 0}, {-2, 1}})))
      return "extended: (1 -2, 0 1) rejected";
    /* two-track families: first blocks (w_i, z_i), second (100, 10) padded */
    auto quad = [&](const std::string& w, int kw, const std::string& z, int kz,
                    const std::string& x, int kx, const std::string& y, int ky) {
      std::vector<Word> rows = {prepend_zeros(word_from_digits(w), kw),
                                prepend_zeros(word_from_digits(z), kz),
                                prepend_zeros(word_from_digits(x), kx),
                                prepend_zeros(word_from_digits(y), ky)};
      Word pair(4);
      for (int p = 0; p < rows[0].size(); ++p)
        pair.letters.push_back({rows[0].letters[p][0], rows[1].letters[p][0],
                               rows[2].letters[p][0], rows[3].letters[p][0]});
      return pair;
    };
    for (int l = 0; l <= 2; ++l) {
      if (!ctx.multi_n().accepts(quad("22", l + 1, "10", l + 1, "100", l, "10", l + 1)))
        return "multidim family 1 rejected at l=" + std::to_string(l);
      if (!ctx.multi_n().accepts(quad("022", l, "010", l, "100", l, "10", l + 1)))
        return "multidim family 2 rejected at l=" + std::to_string(l);
      if (!ctx.multi_n().accepts(quad("0022", l, "0010", l, "100", l + 1, "10", l + 2)))
        return "multidim family 3 rejected at l=" + std::to_string(l);
    }
    return std::nullopt;
  });

  add_check(out, "normalizer-extended-sampled", [&]() -> std::optional<std::string> {
    return oracle::check_normalizer_sampled(ctx.ext_n(), {ctx.phi2}, L,
                                            dim1_letters({-2, -1, 0, 1, 2}), true,
                                            std::max(1, ctx.cfg.sample_count / L), ctx.cfg.seed);
  });

  add_check(out, "normalizer-multidim-sampled", [&]() -> std::optional<std::string> {
    std::vector<Letter> a;
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= 2; ++y) a.push_back({x, y});
    if (auto r = oracle::check_normalizer_sampled(ctx.multi_n(), {ctx.phi2, ctx.phi2}, L, a, true,
                                                  std::max(1, ctx.cfg.sample_count / L),
                                                  ctx.cfg.seed + 1))
      return r;
    /* one-dimensional tensor degenerates to the extended normalizer */
    MultiTapeDFA one = build_multidim_normalizer({ctx.phi2}, ctx.a012);
    MultiTapeDFA ext = build_extended_normalizer(ctx.phi2, {0, 1, 2});
    if (!language_equal(one, ext)) return "d=1 multidim differs from extended normalizer";
    return std::nullopt;
  });

  add_check(out, "normalizer-unique-second", [&]() -> std::optional<std::string> {
    std::vector<Letter> word;
    std::optional<std::string> bad;
    auto rec = [&](auto&& self) -> void {
      if (bad) return;
      Word u(1, word);
      int dl = delay({ctx.phi2}, u);
      long long want = dl > 0 ? 0 : 1;
      if (oracle::count_second_blocks(ctx.base_n(), u) != want) {
        bad = word_to_display(u) + ": expected " + std::to_string(want) + " second blocks";
        return;
      }
      if (dl > 0 && oracle::count_second_blocks(ctx.base_n(), prepend_zeros(u, dl)) != 1) {
        bad = word_to_display(u) + ": padded by its delay, expected exactly one";
        return;
      }
      if (int(word.size()) >= Lpairs) return;
      for (int a = 0; a <= 2; ++a) {
        word.push_back({a});
        self(self);
        word.pop_back();
      }
    };
    rec(rec);
    return bad;
  });

  add_check(out, "greedy-language", [&]() -> std::optional<std::string> {
    MultiTapeDFA lang = greedy_language_dfa(ctx.phi2);
    MultiTapeDFA direct = greedy_zero_dfa(ctx.phi2);
    if (!language_equal(lang, direct)) return "diagonal route differs from direct route";
    if (lang.num_states() != 2) return "expected 2 states, got " + std::to_string(lang.num_states());
    std::vector<Letter> word;
    std::optional<std::string> bad;
    auto rec = [&](auto&& self) -> void {
      if (bad) return;
      Word w(1, word);
      bool want = oracle::in_zero_greedy(ctx.phi2, word_track(w, 0));
      if (lang.accepts(w) != want) {
        bad = word_to_display(w) + (want ? ": wrongly rejected" : ": wrongly accepted");
        return;
      }
      if (int(word.size()) >= L) return;
      for (int a = 0; a <= 2; ++a) {
        word.push_back({a});
        self(self);
        word.pop_back();
      }
    };
    rec(rec);
    return bad;
  });

  add_check(out, "star-product-formula", [&]() -> std::optional<std::string> {
    const auto& sp = ctx.sp();
    std::vector<Letter> word;
    std::optional<std::string> bad;
    auto rec = [&](auto&& self) -> void {
      if (bad) return;
      Word w(1, word);
      BigInt got = weight_of_word(sp.product, w);
      BigInt want = delay({ctx.phi2}, w) == 0
                        ? oracle::value_oracle(ctx.g, {ctx.phi2}, w)
                        : BigInt(0);
      if (got != want) {
        bad = word_to_display(w) + ": product weight " + got.str() + ", formula " + want.str();
        return;
      }
      if (int(word.size()) >= L) return;
      for (int a = 0; a <= 2; ++a) {
        word.push_back({a});
        self(self);
        word.pop_back();
      }
    };
    rec(rec);
    return bad;
  });

  add_check(out, "alpha-paddings", [&]() -> std::optional<std::string> {
    const auto& sp = ctx.sp();
    AlphaTable table = compute_alpha_table(sp);
    if (!table.unique) return "two padding lengths reach one state";
    WeightedAutomaton<NatSemiring> av = build_av(sp);
    /* independent route: per (letter, state), the unique positive padding
     * length gives the alpha-row entry directly */
    const auto& pr = sp.product;
    const int rs = pr.num_states;
    const int zero_li = pr.letter_index(zero_letter(pr.dim));
    std::vector<std::vector<BigInt>> zrow(rs + 1, std::vector<BigInt>(rs, 0));
    zrow[0][sp.normalizer.initial * sp.g_states + sp.g_initial] = 1;
    for (int l = 1; l <= rs; ++l) {
      for (const auto& e : pr.edges)
        if (e.letter == zero_li && zrow[l - 1][e.from] != 0)
          zrow[l][e.to] += zrow[l - 1][e.from] * e.weight;
    }
    for (std::size_t li = 0; li < pr.alphabet.size(); ++li) {
      std::vector<BigInt> want(rs, 0);
      for (int q = 0; q < rs; ++q)
        for (int l : table.paddings[li][q])
          if (l >= 1)
            for (const auto& e : pr.edges)
              if (e.letter == int(li) && e.to == q && zrow[l][e.from] != 0)
                want[q] += zrow[l][e.from] * e.weight;
      std::vector<BigInt> got(rs, 0);
      for (const auto& e : av.edges)
        if (e.from == 0 && e.letter == int(li)) got[e.to - 1] = e.weight;
      for (int q = 0; q < rs; ++q)
        if (got[q] != want[q])
          return "alpha row mismatch on letter " + letter_key(pr.alphabet[li]) + " state " +
                 std::to_string(q);
    }
    /* with delays bounded by 1, alpha must have no zero-letter out-edge */
    for (const auto& e : av.edges)
      if (e.from == 0 && e.letter == zero_li) return "alpha has a zero-letter out-edge";
    return std::nullopt;
  });

  add_check(out, "conversion-oracle", [&]() -> std::optional<std::string> {
    const auto& v = ctx.conv().first;
    return oracle::first_against_reference(
        v, [&](const Word& w) { return oracle::value_oracle(ctx.g, {ctx.phi2}, w); }, L);
  });

  add_check(out, "conversion-report", [&]() -> std::optional<std::string> {
    const ConversionReport& rep = ctx.conv().second;
    if (rep.dim_untrimmed != rep.g_dim * rep.normalizer_states + 1)
      return "untrimmed dimension is not r*s+1";
    if (!rep.paddings_unique) return "padding lengths not unique";
    if (rep.zero_adjoined) return "zero letter wrongly adjoined (it was in the alphabet)";
    return std::nullopt;
  });

  add_check(out, "golden-series", [&]() -> std::optional<std::string> {
    if (linrep_eval(ctx.g, word_from_digits("1121")).str() != "60") return "input at 1121: expected 60";
    if (linrep_eval(ctx.g, word_from_digits("2101")).str() != "18") return "input at 2101: expected 18";
    if (linrep_eval(ctx.g, word_from_digits("2112")).str() != "0") return "input at 2112: expected 0";
    if (linrep_eval(ctx.g, Word(1)).str() != "1") return "input at empty word: expected 1";
    const auto& v = ctx.conv().first;
    const ConversionReport& rep = ctx.conv().second;
    if (rep.dim_untrimmed != 21) return "untrimmed dimension: expected 21";
    if (rep.dim_trimmed != 10) return "trimmed dimension: expected 10";
    return oracle::first_coefficient_mismatch(v, fixture_value_series_phi2<NatSemiring>(), 6);
  });

  add_check(out, "round-trip-greedy", [&]() -> std::optional<std::string> {
    const auto& v = ctx.conv().first;
    LinearRepresentation<NatSemiring> back = value_to_greedy_linrep(v, {ctx.phi2});
    if (auto r = oracle::first_coefficient_mismatch(back, ctx.g, 6)) return r;
    /* leading zeros never change a value-indexed coefficient */
    std::vector<Letter> word;
    std::optional<std::string> bad;
    auto rec = [&](auto&& self) -> void {
      if (bad) return;
      Word w(1, word);
      BigInt base = linrep_eval(v, w);
      for (int k = 1; k <= 3; ++k)
        if (linrep_eval(v, prepend_zeros(w, k)) != base) {
          bad = word_to_display(w) + ": padding by " + std::to_string(k) + " changes it";
          return;
        }
      if (int(word.size()) >= 5) return;
      for (int a = 0; a <= 2; ++a) {
        word.push_back({a});
        self(self);
        word.pop_back();
      }
    };
    rec(rec);
    return bad;
  });

  add_check(out, "signed-alphabet", [&]() -> std::optional<std::string> {
    auto [vs, rep] = greedy_to_value_linrep(ctx.g, {ctx.phi2}, dim1_letters({-2, -1, 0, 1, 2}));
    if (auto r = oracle::first_against_reference(
            vs, [&](const Word& w) { return oracle::value_oracle(ctx.g, {ctx.phi2}, w); }, 4))
      return r;
    LinearRepresentation<NatSemiring> restricted = alphabet_restrict_linrep(vs, ctx.a012);
    return oracle::first_coefficient_mismatch(restricted, ctx.conv().first, 6);
  });

  add_check(out, "boolean-pipeline", [&]() -> std::optional<std::string> {
    /* independent boolean input: true exactly on greedy words containing a 2 */
    MultiTapeDFA has2;
    has2.dim = 1;
    has2.alphabet = ctx.a012;
    has2.initial = 0;
    has2.is_final = {0, 1};
    has2.next = {{0, 0, 1}, {1, 1, 1}};
    MultiTapeDFA support = intersect(rep_language_dfa({ctx.phi2}), has2);
    LinearRepresentation<BoolSemiring> gb = characteristic_linrep<BoolSemiring>(support, ctx.a012);
    auto [vb, rep] = greedy_to_value_linrep(gb, {ctx.phi2}, ctx.a012);
    return oracle::first_against_reference(
        vb,
        [&](const Word& w) {
          BigInt val = val_vec({ctx.phi2}, w)[0];
          std::vector<int> digits = ctx.phi2.greedy_rep(val);
          bool want = false;
          for (int d : digits) want = want || d == 2;
          return want;
        },
        6);
  });

  add_check(out, "genericity-int-rat", [&]() -> std::optional<std::string> {
    auto nat = ctx.conv().first;
    auto [vi, ri] = greedy_to_value_linrep(embed_from_nat<IntSemiring>(ctx.g), {ctx.phi2}, ctx.a012);
    auto [vq, rq] = greedy_to_value_linrep(embed_from_nat<RatSemiring>(ctx.g), {ctx.phi2}, ctx.a012);
    if (auto r = oracle::first_against_reference(
            vi, [&](const Word& w) { return IntSemiring::parse(linrep_eval(nat, w).str()); }, 6))
      return "int: " + *r;
    if (auto r = oracle::first_against_reference(
            vq, [&](const Word& w) { return RatSemiring::parse(linrep_eval(nat, w).str()); }, 6))
      return "rat: " + *r;
    return std::nullopt;
  });

  add_check(out, "json-round-trip", [&]() -> std::optional<std::string> {
    {
      json j1 = numeration_to_json(ctx.phi2);
      json j2 = numeration_to_json(numeration_from_json(j1));
      if (j1 != j2) return "numeration system";
    }
    {
      json j1 = dfa_to_json(ctx.base_n());
      MultiTapeDFA back = dfa_from_json(j1);
      if (j1 != dfa_to_json(back)) return "automaton";
      if (!language_equal(back, ctx.base_n())) return "automaton language changed";
    }
    {
      json j1 = linrep_to_json(ctx.conv().first);
      if (j1 != linrep_to_json(linrep_from_json<NatSemiring>(j1))) return "linear representation";
    }
    {
      json j1 = wfa_to_json(ctx.sp().product);
      if (j1 != wfa_to_json(wfa_from_json<NatSemiring>(j1))) return "weighted automaton";
    }
    return std::nullopt;
  });

  return out;
}

json verification_to_json(const VerificationConfig& config,
                          const std::vector<CheckResult>& results) {
  json j;
  j["config"] = {{"max_word_length", config.max_word_length},
                 {"exhaustive_alphabet_limit", config.exhaustive_alphabet_limit},
                 {"sample_count", config.sample_count},
                 {"seed", config.seed}};
  json checks = json::array();
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_passed(results);
  return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace pisot
