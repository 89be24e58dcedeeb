#include <cctype>

#include "kittab/text_cursor.hpp"

namespace kittab {

char TextCursor::get() {
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void TextCursor::skip_space() {
  while (!at_end()) {
    char c = peek();
    if (c == '#') {
      while (!at_end() && peek() != '\n') get();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      get();
    } else {
      break;
    }
  }
}

bool TextCursor::accept(char c) {
  skip_space();
  if (peek() == c && !at_end()) {
    get();
    return true;
  }
  return false;
}

void TextCursor::expect(char c, std::string_view what) {
  if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + std::string(what));
}

bool TextCursor::at_identifier_start() {
  skip_space();
  char c = peek();
  return !at_end() && (std::isalpha(static_cast<unsigned char>(c)) || c == '_');
}

std::string TextCursor::identifier(std::string_view what) {
  if (!at_identifier_start()) fail("expected " + std::string(what));
  std::string id;
  while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
    id += get();
  return id;
}

std::string TextCursor::digits(std::string_view what) {
  skip_space();
  if (!std::isdigit(static_cast<unsigned char>(peek())) || at_end())
    fail("expected " + std::string(what));
  std::string d;
  while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
  return d;
}

void TextCursor::fail(const std::string& message) const { fail_at(message, line_, column_); }

void TextCursor::fail_at(const std::string& message, int line, int column) const {
  throw ParseError(message, line, column);
}

namespace {

// varpow := name ('^' nat)?
void read_varpow(TextCursor& cur, const PolyRing& ring, Monomial& m) {
  int line = cur.line(), col = cur.column();
  std::string name = cur.identifier("variable");
  auto idx = ring.index_of(name);
  if (!idx) cur.fail_at("unknown variable '" + name + "'", line, col);
  unsigned e = 1;
  if (cur.accept('^')) {
    auto d = cur.digits("exponent");
    if (d.size() > 5 || std::stoul(d) > 65535) cur.fail("exponent too large");
    e = static_cast<unsigned>(std::stoul(d));
  }
  m.set(*idx, m[*idx] + e);
}

}  // namespace

Polynomial read_polynomial(TextCursor& cur, const RingPtr& ring) {
  Polynomial result(ring);
  bool first = true;
  for (;;) {
    cur.skip_space();
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      if (!cur.accept('+')) break;
    } else {
      cur.accept('+');
    }
    first = false;
    cur.skip_space();
    int line = cur.line(), col = cur.column();
    mpq_class coeff(1);
    Monomial m(ring->size());
    bool need_varpow = true;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      mpz_class num(cur.digits("coefficient"));
      mpz_class den(1);
      if (cur.accept('/')) {
        den = mpz_class(cur.digits("denominator"));
        if (den == 0) cur.fail_at("zero denominator", line, col);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      need_varpow = false;
    }
    if (need_varpow) {
      read_varpow(cur, *ring, m);
    }
    while (cur.accept('*')) read_varpow(cur, *ring, m);
    if (negative) coeff = -coeff;
    FieldElement c = [&] {
      try {
        return FieldElement(ring->field(), coeff);
      } catch (const DomainError& e) {
        cur.fail_at(e.what(), line, col);
      }
    }();
    result += Polynomial::term(ring, m, c);
  }
  return result;
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  TextCursor cur(text);
  Polynomial p = read_polynomial(cur, ring);
  cur.skip_space();
  if (!cur.at_end()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
  return p;
}

}  // namespace kittab
