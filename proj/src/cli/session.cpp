#include <algorithm>

#include "kittab/errors.hpp"
#include "kittab/session.hpp"
#include "kittab/text_cursor.hpp"

namespace kittab {

namespace {

using Kind = Argument::Kind;

struct Signature {
  std::string name;
  std::vector<Kind> required;
  std::vector<Kind> optional;
};

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> table = {
      {"gb", {Kind::ideal}, {}},
      {"colon", {Kind::ideal, Kind::ideal}, {}},
      {"intersect", {Kind::ideal, Kind::ideal}, {}},
      {"dim", {Kind::ideal}, {}},
      {"kitt", {Kind::ideal, Kind::ideal}, {Kind::matrix}},
      {"generic_kitt", {Kind::count, Kind::ideal}, {}},
      {"generic_residual", {Kind::count, Kind::ideal}, {}},
      {"specialize", {Kind::count, Kind::ideal, Kind::matrix}, {}},
      {"residual_check", {Kind::ideal, Kind::ideal, Kind::count}, {}},
      {"verify_specialization", {Kind::ideal, Kind::ideal}, {Kind::matrix}},
      {"verify_deformation", {Kind::ideal, Kind::ideal, Kind::count}, {}},
      {"height_report", {Kind::ideal, Kind::ideal, Kind::count}, {}},
      {"g_condition", {Kind::ideal, Kind::count}, {}},
  };
  return table;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::ideal: return "an ideal";
    case Kind::matrix: return "a matrix";
    case Kind::count: return "a count";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_(text) {}

  Session parse() {
    for (;;) {
      cur_.skip_space();
      if (cur_.at_end()) break;
      statement();
    }
    return std::move(session_);
  }

 private:
  Location here() { return {cur_.line(), cur_.column()}; }

  [[noreturn]] void fail(const std::string& message, Location at) {
    cur_.fail_at(message, at.line, at.column);
  }

  void statement() {
    Location at = here();
    if (!cur_.at_identifier_start()) cur_.fail("expected a declaration or command");
    std::string word = cur_.identifier("keyword");
    if (word == "ring")
      ring(at);
    else if (word == "ideal" || word == "matrix" || word == "scalar")
      declaration(word, at);
    else
      command(word, at);
    cur_.expect(';', "to end the statement");
  }

  void ring(Location at) {
    if (session_.ring) fail("only one ring per session", at);
    Location name_at = here();
    std::string name = cur_.identifier("ring name");
    cur_.expect('=', "after the ring name");
    cur_.skip_space();
    Location field_at = here();
    std::string field_name = cur_.identifier("QQ or ZZ/p");
    Field field = Field::rationals();
    if (field_name == "ZZ") {
      cur_.expect('/', "in ZZ/p");
      cur_.skip_space();
      Location p_at = here();
      std::string digits = cur_.digits("a prime");
      if (digits.size() > 10 || std::stoull(digits) > 0xFFFFFFFFull ||
          !is_prime(static_cast<std::uint32_t>(std::stoull(digits))))
        fail(digits + " is not a prime below 2^32", p_at);
      field = Field::prime(static_cast<std::uint32_t>(std::stoull(digits)));
    } else if (field_name != "QQ") {
      fail("unknown coefficient field '" + field_name + "'", field_at);
    }
    cur_.expect('[', "before the variables");
    std::vector<std::string> vars;
    do {
      cur_.skip_space();
      Location var_at = here();
      std::string v = cur_.identifier("variable name");
      if (std::ranges::find(vars, v) != vars.end()) fail("duplicate variable '" + v + "'", var_at);
      if (vars.size() == kMaxVariables)
        fail("at most " + std::to_string(kMaxVariables) + " variables", var_at);
      vars.push_back(std::move(v));
    } while (cur_.accept(','));
    cur_.expect(']', "after the variables");
    session_.ring = PolyRing::make(field, std::move(vars));
    session_.nodes.push_back({Node::Kind::ring, std::move(name), {}, name_at});
  }

  Polynomial polynomial() {
    cur_.skip_space();
    Location at = here();
    Polynomial p = read_polynomial(cur_, session_.ring);
    if (here().line == at.line && here().column == at.column) fail("expected a polynomial", at);
    return p;
  }

  void declaration(const std::string& keyword, Location at) {
    if (!session_.ring && keyword != "scalar") fail("no ring declared", at);
    cur_.skip_space();
    Location name_at = here();
    std::string name = cur_.identifier(keyword + " name");
    if (declared(name)) fail("'" + name + "' is already declared", name_at);
    cur_.expect('=', "after the name");
    if (keyword == "ideal") {
      std::vector<Polynomial> gens;
      do gens.push_back(polynomial());
      while (cur_.accept(','));
      session_.ideals.emplace(name, Ideal(session_.ring, std::move(gens)));
      session_.nodes.push_back({Node::Kind::ideal, name, {}, name_at});
    } else if (keyword == "matrix") {
      cur_.skip_space();
      Location m_at = here();
      cur_.expect('[', "to open the matrix");
      std::vector<Polynomial> entries;
      std::size_t rows = 0, cols = 0;
      do {
        cur_.skip_space();
        Location row_at = here();
        cur_.expect('[', "to open a row");
        std::size_t n = 0;
        do {
          entries.push_back(polynomial());
          ++n;
        } while (cur_.accept(','));
        cur_.expect(']', "to close the row");
        if (rows > 0 && n != cols)
          fail("row has " + std::to_string(n) + " entries, expected " + std::to_string(cols), row_at);
        cols = n;
        ++rows;
      } while (cur_.accept(','));
      cur_.expect(']', "to close the matrix");
      if (rows == 0) fail("empty matrix", m_at);
      session_.matrices.emplace(name, PolyMatrix(session_.ring, rows, cols, std::move(entries)));
      session_.nodes.push_back({Node::Kind::matrix, name, {}, name_at});
    } else {
      std::string digits = cur_.digits("a nonnegative integer");
      if (digits.size() > 6) fail("scalar too large", name_at);
      session_.scalars.emplace(name, std::stoul(digits));
      session_.nodes.push_back({Node::Kind::scalar, name, {}, name_at});
    }
  }

  bool declared(std::string_view name) const {
    return session_.ideals.contains(name) || session_.matrices.contains(name) ||
           session_.scalars.contains(name);
  }

  Argument argument(Kind expected) {
    cur_.skip_space();
    Location at = here();
    if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      std::string digits = cur_.digits("a count");
      if (expected != Kind::count) fail("expected " + kind_name(expected) + ", got a number", at);
      if (digits.size() > 6) fail("count too large", at);
      return {Kind::count, digits, at};
    }
    std::string id = cur_.identifier(kind_name(expected));
    Kind actual;
    if (session_.ideals.contains(id))
      actual = Kind::ideal;
    else if (session_.matrices.contains(id))
      actual = Kind::matrix;
    else if (session_.scalars.contains(id))
      actual = Kind::count;
    else
      fail("unknown identifier '" + id + "'", at);
    if (actual != expected)
      fail("'" + id + "' is " + kind_name(actual) + ", expected " + kind_name(expected), at);
    return {actual, id, at};
  }

  void command(const std::string& name, Location at) {
    auto it = std::ranges::find(signatures(), name, &Signature::name);
    if (it == signatures().end()) fail("unknown command '" + name + "'", at);
    if (!session_.ring) fail("no ring declared", at);
    Node node{Node::Kind::command, name, {}, at};
    for (Kind k : it->required) {
      cur_.skip_space();
      if (cur_.peek() == ';')
        cur_.fail(name + " needs " + std::to_string(it->required.size()) + " arguments");
      node.args.push_back(argument(k));
    }
    for (Kind k : it->optional) {
      cur_.skip_space();
      if (cur_.peek() == ';') break;
      node.args.push_back(argument(k));
    }
    session_.nodes.push_back(std::move(node));
  }

  TextCursor cur_;
  Session session_;
};

}  // namespace

std::size_t Session::command_count() const {
  return std::ranges::count(nodes, Node::Kind::command, &Node::kind);
}

Session parse_session(std::string_view text) { return Parser(text).parse(); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : signatures()) out.push_back(s.name);
    return out;
  }();
  return names;
}

}  // namespace kittab
