#include "nullguard/dsl.hpp"

#include <cctype>

namespace nullguard {

namespace {

enum class TokenKind { ident, colon, star, dot, bang, arrow, neg_arrow, cons_anti_arrow, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
  const Token& peek() const { return tokens_[index_]; }
  Token next() { return tokens_[index_ == tokens_.size() - 1 ? index_ : index_++]; }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = i;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
          ++i;
        tokens_.push_back({TokenKind::ident, std::string(text_.substr(start, i - start)), start});
        continue;
      }
      if (text_.compare(i, 4, "!!|-") == 0) {
        tokens_.push_back({TokenKind::cons_anti_arrow, "!!|-", i});
        i += 4;
        continue;
      }
      if (text_.compare(i, 3, "!|-") == 0) {
        tokens_.push_back({TokenKind::neg_arrow, "!|-", i});
        i += 3;
        continue;
      }
      if (text_.compare(i, 2, "|-") == 0) {
        tokens_.push_back({TokenKind::arrow, "|-", i});
        i += 2;
        continue;
      }
      switch (c) {
        case ':': tokens_.push_back({TokenKind::colon, ":", i}); break;
        case '*': tokens_.push_back({TokenKind::star, "*", i}); break;
        case '.': tokens_.push_back({TokenKind::dot, ".", i}); break;
        case '!': tokens_.push_back({TokenKind::bang, "!", i}); break;
        default:
          throw DslError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
      }
      ++i;
    }
    tokens_.push_back({TokenKind::end, "", text_.size()});
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

DslAtom parse_atom(Lexer& lexer) {
  if (lexer.peek().kind != TokenKind::ident)
    throw DslError("expected a function name at position " + std::to_string(lexer.peek().pos));
  DslAtom atom;
  atom.chain.push_back(lexer.next().text);
  while (lexer.accept(TokenKind::dot)) {
    if (lexer.peek().kind != TokenKind::ident)
      throw DslError("expected a function name after '.' at position " +
                     std::to_string(lexer.peek().pos));
    atom.chain.push_back(lexer.next().text);
  }
  return atom;
}

DslSide parse_side(Lexer& lexer) {
  DslSide side;
  side.atoms.push_back(parse_atom(lexer));
  while (lexer.accept(TokenKind::star)) side.atoms.push_back(parse_atom(lexer));
  return side;
}

}  // namespace

ParsedConstraint parse_constraint(std::string_view text) {
  Lexer lexer(text);
  ParsedConstraint out;

  // Optional "name:" prefix. An ident is only a name when a colon follows;
  // otherwise it starts the left side.
  if (lexer.peek().kind == TokenKind::ident) {
    Lexer lookahead = lexer;
    lookahead.next();
    if (lookahead.peek().kind == TokenKind::colon) {
      out.name = lexer.next().text;
      lexer.next();  // colon
    }
  }

  switch (lexer.peek().kind) {
    case TokenKind::arrow:
    case TokenKind::neg_arrow:
    case TokenKind::cons_anti_arrow: {
      const TokenKind arrow = lexer.next().kind;
      out.inexist = arrow != TokenKind::neg_arrow;
      out.negation = arrow != TokenKind::arrow;
      out.right = parse_side(lexer);
      if (out.right.atoms.size() < 2)
        throw DslError("a coalesced constraint needs a function product on the right");
      break;
    }
    default: {
      out.inexist = lexer.accept(TokenKind::bang);
      out.left = parse_side(lexer);
      if (lexer.accept(TokenKind::arrow))
        out.negation = false;
      else if (lexer.accept(TokenKind::neg_arrow))
        out.negation = true;
      else
        throw DslError("expected '|-' or '!|-' at position " + std::to_string(lexer.peek().pos));
      out.right = parse_side(lexer);
    }
  }
  if (lexer.peek().kind != TokenKind::end)
    throw DslError("trailing input at position " + std::to_string(lexer.peek().pos));
  return out;
}

namespace {

FuncId resolve_atom(const DslAtom& atom, Catalog& catalog) {
  if (atom.chain.size() == 1) {
    const FunctionDef* f = catalog.find_function(atom.chain.front());
    if (!f) throw DslError("unknown function: " + atom.chain.front());
    return f->func_id;
  }
  std::vector<FuncId> chain;
  for (const std::string& name : atom.chain) {
    const FunctionDef* f = catalog.find_function(name);
    if (!f) throw DslError("unknown function: " + name);
    if (f->kind != FunctionKind::atomic)
      throw DslError("composition chain link must be atomic: " + name);
    chain.push_back(f->func_id);
  }
  return catalog.ensure_composite(chain);
}

FuncId resolve_side(const DslSide& side, Catalog& catalog) {
  std::vector<FuncId> atoms;
  for (const DslAtom& atom : side.atoms) atoms.push_back(resolve_atom(atom, catalog));
  if (atoms.size() == 1) return atoms.front();
  return catalog.ensure_product(atoms);
}

}  // namespace

ResolvedConstraint resolve_constraint(const ParsedConstraint& parsed, Catalog& catalog) {
  ResolvedConstraint out;
  out.name = parsed.name;
  out.inexist = parsed.inexist;
  out.negation = parsed.negation;
  if (parsed.left) out.left = resolve_side(*parsed.left, catalog);
  out.right = resolve_side(parsed.right, catalog);
  return out;
}

}  // namespace nullguard
