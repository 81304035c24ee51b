#include "malcev5/text.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>

#include "malcev5/combinatorics.hpp"

namespace malcev5 {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  UElement parse() {
    UElement out;
    skip_blanks();
    if (at_end()) throw ParseError(pos_, "empty expression");
    int sign = 1;
    if (auto s = take_sign()) sign = *s;
    parse_term(sign, out);
    while (true) {
      skip_blanks();
      if (at_end()) break;
      const std::size_t here = pos_;
      auto s = take_sign();
      if (!s) throw ParseError(here, "expected '+' or '-'");
      parse_term(*s, out);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<int> take_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    // U+2212 MINUS SIGN in UTF-8.
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return -1;
    }
    return std::nullopt;
  }

  Integer take_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void parse_term(int sign, UElement& out) {
    skip_blanks();
    Rational coeff = sign;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = take_uint();
      Integer den = 1;
      skip_blanks();
      if (peek() == '/') {
        ++pos_;
        skip_blanks();
        const std::size_t den_pos = pos_;
        den = take_uint();
        if (den == 0) throw ParseError(den_pos, "zero denominator");
      }
      coeff *= make_rational(num, den);
      have_coeff = true;
      skip_blanks();
      if (peek() == '*') {
        ++pos_;
        skip_blanks();
        if (!letter_from_char(peek())) throw ParseError(pos_, "expected a monomial after '*'");
      }
    }
    if (!letter_from_char(peek())) {
      if (have_coeff) {
        out.add_term(Monomial{}, coeff);
        return;
      }
      throw ParseError(pos_, "expected a coefficient or a monomial");
    }
    out.add_term(parse_monomial(), coeff);
  }

  Monomial parse_monomial() {
    ExponentTuple exps{};
    int last = -1;
    while (true) {
      const std::size_t letter_pos = pos_;
      const auto v = letter_from_char(peek());
      if (!v) throw ParseError(pos_, "expected a letter a..e");
      ++pos_;
      const int idx = static_cast<int>(index_of(*v));
      if (idx <= last) throw ParseError(letter_pos, std::string(kLetterOrderMessage));
      last = idx;
      Exponent n = 1;
      skip_blanks();
      if (peek() == '^') {
        ++pos_;
        skip_blanks();
        const std::size_t num_pos = pos_;
        const Integer value = take_uint();
        if (value > std::numeric_limits<Exponent>::max()) throw ParseError(num_pos, "exponent too large");
        n = static_cast<Exponent>(value.get_ui());
        skip_blanks();
      }
      exps[static_cast<std::size_t>(idx)] = n;
      const std::size_t before_star = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_blanks();
        if (!letter_from_char(peek())) throw ParseError(before_star, "dangling '*'");
        continue;
      }
      if (!letter_from_char(peek())) break;
    }
    return Monomial(exps);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename Terms, typename MonomialOf>
std::string format_terms(const Terms& terms, MonomialOf monomial_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const Monomial& mono = monomial_of(key);
    const Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.is_unit()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + " ";
      out += to_string(mono);
    }
  }
  return out;
}

nlohmann::json term_json(const Monomial& mono, const Rational& coeff) {
  nlohmann::json exps = nlohmann::json::array();
  for (Exponent x : mono.exponents()) exps.push_back(x);
  return nlohmann::json{{"coeff", to_string(coeff)}, {"exp", exps}};
}

}  // namespace

UElement parse_element(std::string_view text) { return Parser(text).parse(); }

std::string format_element(const UElement& x) {
  return format_terms(x.terms(), [](const Monomial& m) -> const Monomial& { return m; });
}

std::string format_element(const AElement& x) {
  return format_terms(x.terms(), [](const AMonomial& m) -> const Monomial& { return m.pbw(); });
}

std::string format_json(const UElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mono, coeff] : x.terms()) out.push_back(term_json(mono, coeff));
  return out.dump();
}

std::string format_json(const AElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [am, coeff] : x.terms()) {
    nlohmann::json term = term_json(am.pbw(), coeff);
    term["type"] = static_cast<int>(am.type());
    out.push_back(std::move(term));
  }
  return out.dump();
}

}  // namespace malcev5
