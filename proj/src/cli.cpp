#include "lacunary/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lacunary/binomial_gcd.hpp"
#include "lacunary/criteria.hpp"
#include "lacunary/equality.hpp"
#include "lacunary/oracle.hpp"
#include "lacunary/trinomial.hpp"

namespace lacunary {

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  SparsePoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", 1);
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
      skip_ws();
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", column());
      sign = get() == '-' ? -1 : 1;
      skip_ws();
      terms.push_back(term(sign));
    }
    return SparsePoly(std::move(terms));
  }

 private:
  Term term(int sign) {
    if (at_end()) throw ParseError("expected a term", column());
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", column());
      } else if (at_end() || peek() != 'x') {
        return {0, sign * coeff};
      }
    } else if (peek() != 'x') {
      throw ParseError("expected a coefficient or 'x'", column());
    }
    get();  // 'x'
    skip_ws();
    Exponent e = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent", column());
      const std::size_t start = column();
      const Integer big(digits());
      if (!big.fits_ulong_p() || big > Integer(static_cast<unsigned long>(1) << 40))
        throw ParseError("exponent too large", start);
      e = big.get_ui();
    }
    return {e, sign * coeff};
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  char get() { return s_[i_++]; }
  std::size_t column() const { return i_ + 1; }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

PolyExpr parse_poly(const std::string& text) {
  PolyExpr e;
  e.source = text;
  e.raw = Parser(text).parse();
  if (e.raw.is_zero()) {
    e.extracted_content = 0;
    return e;
  }
  e.extracted_content = content_primitive(e.raw).content;
  auto [k, rest] = strip_x_power(e.raw);
  e.stripped_power = k;
  e.normalized = std::move(rest);
  return e;
}

std::string format_poly(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (std::size_t i = terms.size(); i-- > 0;) {
    const Term& t = terms[i];
    const bool negative = t.coeff < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    const Integer mag = abs(t.coeff);
    if (mag != 1 || t.exp == 0) out += mag.get_str();
    if (t.exp >= 1) out += 'x';
    if (t.exp >= 2) out += '^' + std::to_string(t.exp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture scan

namespace {

struct ScanItem {
  std::vector<Exponent> exps;  // ascending, first is q
};

void enumerate_exponent_sets(Exponent q, Exponent max_degree, std::vector<ScanItem>& out) {
  const Exponent span = max_degree - q;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << span); ++mask) {
    ScanItem item;
    item.exps.push_back(q);
    for (Exponent b = 0; b < span; ++b)
      if (mask >> b & 1) item.exps.push_back(q + 1 + b);
    out.push_back(std::move(item));
  }
}

struct PrimePowerChoice {
  long value;
  long p;
  unsigned u;
};

struct ScanChunk {
  std::uint64_t tested = 0;
  std::vector<SparsePoly> reducible;
};

ScanChunk scan_exponents(const ScanItem& item, const std::vector<PrimePowerChoice>& pps, long bound,
                         Exponent cap) {
  ScanChunk out;
  const std::size_t k = item.exps.size();
  std::vector<long> coeffs(k, -bound);
  for (const auto& pp : pps) {
    // odometer over nonzero coefficients in [-bound, bound]
    std::fill(coeffs.begin(), coeffs.end(), -bound);
    while (true) {
      long tail = 0;
      for (long c : coeffs) tail += std::labs(c);
      const bool ends_ok = coeffs.front() % pp.p != 0 && coeffs.back() % pp.p != 0;
      if (tail < pp.value && ends_ok) {
        for (int eps : {1, -1}) {
          std::vector<Term> terms;
          terms.reserve(k + 1);
          terms.push_back({0, Integer(eps * pp.value)});
          for (std::size_t i = 0; i < k; ++i) terms.push_back({item.exps[i], Integer(coeffs[i])});
          SparsePoly f(std::move(terms));
          const FamilyMembership m = classify_family(f);
          if (!m.in_S_prime || m.n1 != item.exps.front())
            throw InternalInconsistency("scan enumerated a polynomial outside S'_q");
          ++out.tested;
          if (!is_irreducible(f, cap)) out.reducible.push_back(std::move(f));
        }
      }
      std::size_t i = 0;
      for (; i < k; ++i) {
        do {
          ++coeffs[i];
        } while (coeffs[i] == 0);
        if (coeffs[i] <= bound) break;
        coeffs[i] = -bound;
      }
      if (i == k) break;
    }
  }
  return out;
}

bool canonical_less(const SparsePoly& a, const SparsePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (Exponent e = a.degree() + 1; e-- > 0;) {
    const Integer ca = a.coeff(e);
    const Integer cb = b.coeff(e);
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

ScanReport scan_conjecture(const ScanParams& params) {
  if (params.q < 2 || !is_prime(static_cast<std::uint64_t>(params.q))) {
    std::string msg = "scan: q = " + std::to_string(params.q) + " is not prime";
    if (params.q == 4)
      msg += "; composite lowest exponents fail, e.g. x^8+x^6+x^4+4 = (x^4-x^3+x^2-2x+2)(x^4+x^3+x^2+2x+2) "
             "lies in S'_4 with 4 > 1+1+1";
    throw std::invalid_argument(msg);
  }
  if (params.max_degree < params.q) throw std::invalid_argument("scan: max_degree must be at least q");
  if (params.max_degree > kMaxDegreeCap) throw std::invalid_argument("scan: max_degree exceeds the oracle cap");
  if (params.max_degree - params.q > 20) throw std::invalid_argument("scan: too many exponent sets");
  if (params.coeff_bound < 1 || params.coeff_bound > 1000) throw std::invalid_argument("scan: coeff_bound must be in [1, 1000]");
  if (params.pp_bound < 2 || params.pp_bound > (1L << 40)) throw std::invalid_argument("scan: pp_bound out of range");

  const auto start = std::chrono::steady_clock::now();
  std::vector<PrimePowerChoice> pps;
  for (long v = 4; v <= params.pp_bound; ++v) {
    const auto pp = prime_power_decompose(Integer(v));
    if (!pp || pp->u < 2 || pp->u % params.q == 0) continue;
    pps.push_back({v, pp->p.get_si(), pp->u});
  }
  std::vector<ScanItem> items;
  enumerate_exponent_sets(params.q, params.max_degree, items);

  const unsigned workers =
      std::max(1u, params.workers ? params.workers : std::thread::hardware_concurrency());
  std::vector<ScanChunk> chunks(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
      chunks[i] = scan_exponents(items[i], pps, params.coeff_bound, params.max_degree);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  ScanReport report;
  for (auto& c : chunks) {
    report.tested += c.tested;
    for (auto& f : c.reducible) report.counterexamples.push_back(std::move(f));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(), canonical_less);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

using nlohmann::json;

json optional_poly(const std::optional<SparsePoly>& f) { return f ? json(format_poly(*f)) : json(nullptr); }

json membership_json(const FamilyMembership& m) {
  json j;
  j["n1"] = m.n1;
  j["nr"] = m.nr;
  j["p"] = m.prime_power ? json(m.prime_power->p.get_str()) : json(nullptr);
  j["u"] = m.prime_power ? json(m.prime_power->u) : json(nullptr);
  j["epsilon"] = m.epsilon;
  j["tail_sum"] = m.tail_sum.get_str();
  j["in_S"] = m.in_S;
  j["in_S_prime"] = m.in_S_prime;
  j["exclusion_reason"] = m.exclusion_reason ? json(std::string(to_string(*m.exclusion_reason))) : json(nullptr);
  return j;
}

std::string membership_text(const FamilyMembership& m) {
  std::ostringstream os;
  os << "n1=" << m.n1 << " nr=" << m.nr << " a0=" << (m.epsilon < 0 ? "-" : "+");
  if (m.prime_power)
    os << m.prime_power->p << "^" << m.prime_power->u;
  else
    os << "(not a prime power)";
  os << " tail_sum=" << m.tail_sum << " S_" << m.n1 << "=" << (m.in_S ? "yes" : "no") << " S'_" << m.n1 << "="
     << (m.in_S_prime ? "yes" : "no");
  if (m.exclusion_reason) os << " excluded_by=" << to_string(*m.exclusion_reason);
  return os.str();
}

int exit_for(Verdict v) {
  return (v == Verdict::Irreducible || v == Verdict::Decomposed) ? kExitDefinitive : kExitNoVerdict;
}

/// Oracle cross-check of a certificate on g. nullopt when g is beyond the cap.
std::optional<bool> oracle_agrees(const SparsePoly& g, const Certificate& cert) {
  if (g.degree() > kDefaultDegreeCap) return std::nullopt;
  switch (cert.verdict) {
    case Verdict::Irreducible:
      return is_irreducible(g, kDefaultDegreeCap);
    case Verdict::Decomposed: {
      if (!cert.f_c || !cert.f_n) return false;
      if (*cert.f_c * *cert.f_n != g) return false;
      if (cert.f_n_certified_irreducible && !cert.f_n->is_constant() && !is_irreducible(*cert.f_n, kDefaultDegreeCap))
        return false;
      SparsePoly cyclo = SparsePoly::constant(1);
      for (const auto& [d, mult] : cyclotomic_factor_list(g)) {
        if (mult != 1 && cert.f_n_certified_irreducible) return false;
        cyclo *= cyclotomic(d);
      }
      if (cert.f_n_certified_irreducible && cyclo != *cert.f_c) return false;
      return true;
    }
    case Verdict::NotApplicable:
    case Verdict::Unknown:
      return true;
  }
  return true;
}

struct Report {
  json j;
  std::vector<std::pair<std::string, std::string>> lines;

  void line(std::string k, std::string v) { lines.emplace_back(std::move(k), std::move(v)); }
  std::string text() const {
    std::string out;
    for (const auto& [k, v] : lines) out += k + ": " + v + "\n";
    return out;
  }
};

Report certificate_report(const PolyExpr& expr, const Certificate& cert, bool verify) {
  Report r;
  r.j["input"] = expr.source;
  r.j["normalized"] = format_poly(expr.normalized);
  r.j["stripped_power"] = expr.stripped_power;
  r.j["content"] = expr.extracted_content.get_str();
  r.j["membership"] = membership_json(cert.membership);
  r.j["verdict"] = std::string(to_string(cert.verdict));
  r.j["criterion"] = std::string(to_string(cert.criterion));
  r.j["f_c"] = optional_poly(cert.f_c);
  r.j["f_n"] = optional_poly(cert.f_n);
  r.j["f_n_certified"] = cert.f_n_certified_irreducible;

  r.line("input", expr.source);
  r.line("normalized", format_poly(expr.normalized));
  r.line("stripped_power", std::to_string(expr.stripped_power));
  r.line("content", expr.extracted_content.get_str());
  r.line("membership", membership_text(cert.membership));
  r.line("verdict", std::string(to_string(cert.verdict)));
  r.line("criterion", std::string(to_string(cert.criterion)));
  if (cert.f_c) r.line("f_c", format_poly(*cert.f_c));
  if (cert.f_n) r.line("f_n", format_poly(*cert.f_n));
  if (cert.f_c || cert.f_n) r.line("f_n_certified", cert.f_n_certified_irreducible ? "yes" : "no");
  if (!cert.notes.empty()) r.line("notes", cert.notes);
  if (verify) {
    const auto agree = oracle_agrees(expr.normalized, cert);
    r.j["oracle_agreement"] = agree ? json(*agree) : json(nullptr);
    r.line("oracle_agreement", agree ? (*agree ? "true" : "false") : "skipped (degree above oracle cap)");
  }
  return r;
}

PolyExpr parse_classifiable(const std::string& text) {
  PolyExpr e = parse_poly(text);
  if (e.raw.is_zero()) throw std::invalid_argument("the zero polynomial cannot be classified");
  if (e.normalized.is_constant())
    throw std::invalid_argument("after stripping x^" + std::to_string(e.stripped_power) + " the polynomial is constant");
  return e;
}

CommandResult emit(const Report& r, bool as_json, int code) {
  CommandResult res;
  res.exit_code = code;
  res.out = as_json ? r.j.dump(2) + "\n" : r.text();
  return res;
}

CommandResult cmd_classify(const std::string& text, bool as_json, bool verify) {
  const PolyExpr e = parse_classifiable(text);
  const SparsePoly& g = e.normalized;
  Certificate cert = check_strict(g);
  if (cert.verdict == Verdict::NotApplicable) {
    Certificate perron = check_perron(g);
    if (perron.verdict == Verdict::Irreducible) {
      perron.membership = cert.membership;
      cert = std::move(perron);
    }
  }
  Report r = certificate_report(e, cert, verify);
  const bool outside = no_root_in_closed_unit_disk(g);
  r.j["roots_outside_unit_disk"] = outside;
  r.line("roots_outside_unit_disk", outside ? "yes" : "not established");
  const auto bound = max_nonreciprocal_factor_bound(g);
  r.j["nonreciprocal_factor_bound"] = bound ? json(*bound) : json(nullptr);
  if (bound) r.line("nonreciprocal_factor_bound", std::to_string(*bound));
  return emit(r, as_json, exit_for(cert.verdict));
}

Certificate decompose_certificate(const SparsePoly& g) {
  const FamilyMembership m = classify_family(g);
  if (!is_equality_case(g)) {
    Certificate cert;
    cert.criterion = Criterion::CyclotomicPart;
    cert.verdict = Verdict::NotApplicable;
    cert.membership = m;
    cert.notes = "requires |a0| = sum of the other |coefficients|";
    return cert;
  }
  if (Certificate c = check_positive_case(g, m); c.verdict != Verdict::NotApplicable) return c;
  if (Certificate c = check_consecutive_exponents(g, m); c.verdict != Verdict::NotApplicable) return c;

  Decomposition dec = decompose_equality(g, m);
  Certificate cert;
  cert.membership = m;
  cert.criterion = dec.certified_by.value_or(Criterion::CyclotomicPart);
  cert.f_n_certified_irreducible = dec.f_n_certified_irreducible;
  if (dec.f_c.is_one() && dec.f_n_certified_irreducible) {
    cert.verdict = Verdict::Irreducible;
    cert.notes = "trivial cyclotomic part";
  } else {
    cert.verdict = Verdict::Decomposed;
    cert.notes = dec.f_c.is_one() ? "trivial cyclotomic part" : "cyclotomic part split off";
  }
  if (!dec.f_n_nonreciprocal && dec.f_n_certified_irreducible)
    throw InternalInconsistency("certified f_n is reciprocal");
  cert.f_c = std::move(dec.f_c);
  cert.f_n = std::move(dec.f_n);
  return cert;
}

CommandResult cmd_decompose(const std::string& text, bool as_json, bool verify) {
  const PolyExpr e = parse_classifiable(text);
  const Certificate cert = decompose_certificate(e.normalized);
  return emit(certificate_report(e, cert, verify), as_json, exit_for(cert.verdict));
}

TrinomialSpec parse_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 8) throw std::invalid_argument("--spec needs a,n,eps1,b,m,p,u,eps2");
  auto integer = [](const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("--spec: bad integer '" + s + "'");
    return z;
  };
  auto small = [&](const std::string& s) -> long {
    const Integer z = integer(s);
    if (!z.fits_slong_p()) throw std::invalid_argument("--spec: value out of range '" + s + "'");
    return z.get_si();
  };
  TrinomialSpec t;
  t.a = integer(parts[0]);
  const long n = small(parts[1]);
  t.eps1 = static_cast<int>(small(parts[2]));
  t.b = integer(parts[3]);
  const long m = small(parts[4]);
  t.p = integer(parts[5]);
  const long u = small(parts[6]);
  t.eps2 = static_cast<int>(small(parts[7]));
  if (n < 1 || m < 1 || u < 1 || u > 4096) throw std::invalid_argument("--spec: n, m, u must be positive");
  t.n = static_cast<Exponent>(n);
  t.m = static_cast<Exponent>(m);
  t.u = static_cast<unsigned>(u);
  t.validate();
  return t;
}

CommandResult cmd_trinomial(const std::string& text, const std::string& spec_text, bool as_json, bool verify) {
  TrinomialSpec t;
  PolyExpr e;
  if (!spec_text.empty()) {
    if (!text.empty()) throw std::invalid_argument("give either a polynomial or --spec, not both");
    t = parse_spec(spec_text);
    e = parse_poly(format_poly(t.to_poly()));
    e.source = spec_text;
  } else {
    if (text.empty()) throw std::invalid_argument("trinomial needs a polynomial or --spec");
    e = parse_classifiable(text);
    if (e.stripped_power != 0) throw std::invalid_argument("trinomial needs a nonzero constant term");
    auto parsed = trinomial_from_poly(e.normalized);
    if (!parsed) throw std::invalid_argument("expected a x^n + c x^m + d with a > 0 and |d| a prime power");
    t = *parsed;
    t.validate();
  }

  Certificate cert;
  const Integer pp = t.prime_power();
  if (pp == t.a + t.b) {
    cert = classify_equality_trinomial(t);
  } else {
    cert = check_strict(e.normalized);
  }
  Report r = certificate_report(e, cert, verify);

  const Integer disc = discriminant_general_trinomial(t);
  const Separability sep = is_separable(t);
  const SeparabilityClass cls = classify_exception_corollary(t);
  json tj;
  tj["a"] = t.a.get_str();
  tj["n"] = t.n;
  tj["eps1"] = t.eps1;
  tj["b"] = t.b.get_str();
  tj["m"] = t.m;
  tj["p"] = t.p.get_str();
  tj["u"] = t.u;
  tj["eps2"] = t.eps2;
  tj["discriminant"] = disc.get_str();
  tj["separability_applicable"] = sep.applicable;
  tj["separable"] = sep.applicable ? json(sep.separable) : json(nullptr);
  tj["witness"] = sep.witness ? json(sep.witness->get_str()) : json(nullptr);
  tj["exception_class"] = std::string(to_string(cls));
  r.j["trinomial"] = tj;
  r.line("discriminant", disc.get_str());
  r.line("separable", sep.applicable ? (sep.separable ? "yes" : "no") : "hypotheses fail (" + sep.note + ")");
  if (sep.witness) r.line("repeated_root", sep.witness->get_str());
  r.line("exception_class", std::string(to_string(cls)));
  if (verify && e.normalized.degree() <= kDefaultDegreeCap) {
    const bool disc_ok = discriminant(e.normalized) == disc;
    const bool prior = r.j["oracle_agreement"].get<bool>();
    r.j["oracle_agreement"] = prior && disc_ok;
    r.lines.emplace_back("discriminant_check", disc_ok ? "resultant agrees" : "resultant DISAGREES");
  }
  return emit(r, as_json, exit_for(cert.verdict));
}

CommandResult cmd_factor(const std::string& text, Exponent max_degree, bool as_json) {
  const PolyExpr e = parse_poly(text);
  if (e.raw.is_zero()) throw std::invalid_argument("the zero polynomial has no factorization");
  if (max_degree > kMaxDegreeCap)
    throw std::invalid_argument("--max-degree above the supported maximum " + std::to_string(kMaxDegreeCap));
  if (e.raw.degree() > max_degree)
    throw std::invalid_argument("degree " + std::to_string(e.raw.degree()) + " exceeds --max-degree " +
                                std::to_string(max_degree));
  const Factorization fac = factorize(e.raw, max_degree);
  const bool irreducible = abs(fac.content) == 1 && fac.factor_count() == 1;

  Report r;
  r.j["input"] = e.source;
  r.j["normalized"] = format_poly(e.normalized);
  r.j["stripped_power"] = e.stripped_power;
  r.j["content"] = fac.content.get_str();
  r.j["membership"] = nullptr;
  r.j["verdict"] = irreducible ? "Irreducible" : "Decomposed";
  r.j["criterion"] = "oracle";
  r.j["f_c"] = nullptr;
  r.j["f_n"] = nullptr;
  r.j["f_n_certified"] = false;
  json list = json::array();
  r.line("input", e.source);
  r.line("content", fac.content.get_str());
  for (const auto& fp : fac.factors) {
    list.push_back({{"factor", format_poly(fp.factor)}, {"multiplicity", fp.multiplicity}});
    r.line("factor", format_poly(fp.factor) + (fp.multiplicity > 1 ? "  ^" + std::to_string(fp.multiplicity) : ""));
  }
  r.j["factors"] = list;
  r.line("verdict", irreducible ? "Irreducible" : "Decomposed");
  return emit(r, as_json, kExitDefinitive);
}

CommandResult cmd_scan(const ScanParams& params, bool as_json) {
  const ScanReport rep = scan_conjecture(params);
  Report r;
  json ce = json::array();
  for (const auto& f : rep.counterexamples) ce.push_back(format_poly(f));
  r.j["q"] = params.q;
  r.j["max_degree"] = params.max_degree;
  r.j["coeff_bound"] = params.coeff_bound;
  r.j["pp_bound"] = params.pp_bound;
  r.j["tested"] = rep.tested;
  r.j["counterexamples"] = ce;
  r.j["elapsed_seconds"] = rep.elapsed.count();
  r.line("q", std::to_string(params.q));
  r.line("max_degree", std::to_string(params.max_degree));
  r.line("coeff_bound", std::to_string(params.coeff_bound));
  r.line("pp_bound", std::to_string(params.pp_bound));
  r.line("tested", std::to_string(rep.tested));
  r.line("counterexamples", std::to_string(rep.counterexamples.size()));
  for (const auto& f : rep.counterexamples) r.line("counterexample", format_poly(f));
  std::ostringstream el;
  el.precision(3);
  el << std::fixed << rep.elapsed.count() << " s";
  r.line("elapsed", el.str());
  return emit(r, as_json, kExitDefinitive);
}

// A polynomial such as "-x^2+1" would otherwise be read as a short flag.
std::vector<std::string> protect_negative_polys(const std::vector<std::string>& args) {
  std::vector<std::string> flags;
  std::vector<std::string> polys;
  for (const auto& a : args) {
    const bool looks_poly = a.size() >= 2 && a[0] == '-' &&
                            (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == 'x' || a[1] == ' ');
    (looks_poly ? polys : flags).push_back(a);
  }
  if (polys.empty()) return args;
  bool has_double_dash = std::find(flags.begin(), flags.end(), "--") != flags.end();
  if (!has_double_dash) flags.push_back("--");
  for (auto& p : polys) flags.push_back(std::move(p));
  return flags;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Irreducibility criteria for lacunary integer polynomials with prime-power constant term",
               "lacunary"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool verify = false;
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.add_flag("--verify", verify, "cross-check the verdict against the factoring oracle");

  std::string poly_text;
  std::string spec_text;
  Exponent max_degree = kDefaultDegreeCap;
  ScanParams scan;

  auto* classify = app.add_subcommand("classify", "family membership, strict criteria and Perron");
  classify->add_option("poly", poly_text, "polynomial in x")->required();
  auto* decompose = app.add_subcommand("decompose", "equality case: cyclotomic and non-cyclotomic parts");
  decompose->add_option("poly", poly_text, "polynomial in x")->required();
  auto* trinomial = app.add_subcommand("trinomial", "discriminant, separability and the equality trinomial");
  trinomial->add_option("poly", poly_text, "a x^n + c x^m + d");
  trinomial->add_option("--spec", spec_text, "a,n,eps1,b,m,p,u,eps2");
  auto* factor = app.add_subcommand("factor", "complete factorization by the oracle");
  factor->add_option("poly", poly_text, "polynomial in x")->required();
  factor->add_option("--max-degree", max_degree, "degree cap")->required();
  auto* scan_cmd = app.add_subcommand("scan", "search S'_q for reducible instances");
  scan_cmd->add_option("--q", scan.q, "lowest positive exponent (prime)")->required();
  scan_cmd->add_option("--max-degree", scan.max_degree, "largest exponent")->required();
  scan_cmd->add_option("--coeff-bound", scan.coeff_bound, "bound on |a_i|")->required();
  scan_cmd->add_option("--pp-bound", scan.pp_bound, "bound on p^u")->required();
  scan_cmd->add_option("--workers", scan.workers, "worker threads (0: hardware)");

  CommandResult res;
  try {
    std::vector<std::string> rev = protect_negative_polys(args);
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitInputError;
    res.err = std::string("error: ") + e.what() + "\n" + app.help();
    return res;
  }

  try {
    if (classify->parsed()) return cmd_classify(poly_text, as_json, verify);
    if (decompose->parsed()) return cmd_decompose(poly_text, as_json, verify);
    if (trinomial->parsed()) return cmd_trinomial(poly_text, spec_text, as_json, verify);
    if (factor->parsed()) return cmd_factor(poly_text, max_degree, as_json);
    if (scan_cmd->parsed()) return cmd_scan(scan, as_json);
  } catch (const InternalInconsistency& e) {
    res.exit_code = kExitInputError;
    res.err = std::string("internal inconsistency: ") + e.what() + "\n";
    return res;
  } catch (const std::invalid_argument& e) {
    res.exit_code = kExitInputError;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  } catch (const std::domain_error& e) {
    res.exit_code = kExitInputError;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
  res.exit_code = kExitInputError;
  res.err = app.help();
  return res;
}

}  // namespace lacunary
