#include "vembed/word.hpp"

#include <algorithm>
#include <cctype>

namespace vembed {

void Word::push_letter(int var, long long exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().var == var) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({var, exp});
}

Word Word::generator(int var, long long exp) {
  if (var < 1) throw Error("variable index must be positive");
  Word w;
  w.push_letter(var, exp);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Letter& l : rhs.letters_) w.push_letter(l.var, l.exp);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.push_letter(it->var, -it->exp);
  }
  return w;
}

Word Word::power(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  long long reps = k < 0 ? -k : k;
  Word acc;
  for (long long i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

Word Word::shift_variables(int offset) const {
  Word w;
  for (const Letter& l : letters_) w.push_letter(l.var + offset, l.exp);
  return w;
}

int Word::arity() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.var);
  return m;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) out += '*';
    first = false;
    out += 'x';
    out += std::to_string(l.var);
    if (l.exp != 1) {
      out += '^';
      out += std::to_string(l.exp);
    }
  }
  return out;
}

bool WordSet::non_trivial() const {
  return std::any_of(words_.begin(), words_.end(),
                     [](const Word& w) { return !w.is_empty(); });
}

int WordSet::max_arity() const {
  int m = 0;
  for (const Word& w : words_) m = std::max(m, w.arity());
  return m;
}

std::string WordSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += "; ";
    out += words_[i].str();
  }
  out += '}';
  return out;
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse_full_word() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return w;
  }

  WordSet parse_full_set() {
    skip_ws();
    std::vector<Word> words;
    if (peek() == '{') {
      ++pos_;
      skip_ws();
      if (peek() == '}') {
        ++pos_;
      } else {
        for (;;) {
          words.push_back(parse_word());
          skip_ws();
          if (peek() == ';') { ++pos_; continue; }
          if (peek() == '}') { ++pos_; break; }
          throw ParseError("expected ';' or '}' in word set", pos_);
        }
      }
    } else {
      words.push_back(parse_word());
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return WordSet(std::move(words));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", pos_);
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  // word := term ('*' term)*
  Word parse_word() {
    Word acc = parse_term();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * parse_term();
      } else {
        return acc;
      }
    }
  }

  // term := factor ('^' integer)?
  Word parse_term() {
    Word f = parse_factor();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long long e = parse_int();
      return f.power(e);
    }
    return f;
  }

  // factor := variable | '[' word ',' word ']' | '(' word ')' | '1'
  Word parse_factor() {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected variable index after 'x'", pos_);
      }
      long long v = parse_int();
      if (v < 1) throw ParseError("variable index must be positive", pos_);
      return Word::generator(static_cast<int>(v));
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_word();
      skip_ws();
      if (peek() != ',') throw ParseError("expected ',' in commutator", pos_);
      ++pos_;
      Word b = parse_word();
      skip_ws();
      if (peek() != ']') throw ParseError("expected ']' in commutator", pos_);
      ++pos_;
      return Word::commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return w;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    throw ParseError("expected variable, commutator or '('", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse_full_word(); }

WordSet parse_word_set(std::string_view text) { return WordParser(text).parse_full_set(); }

Word derived_word(int level, int level_bound) {
  if (level < 0) throw Error("derived word level must be nonnegative");
  if (level > level_bound) {
    throw Error("derived word level exceeds bound " + std::to_string(level_bound));
  }
  if (level == 0) return Word::generator(1);
  Word prev = derived_word(level - 1, level_bound);
  return Word::commutator(prev, prev.shift_variables(1 << (level - 1)));
}

Word lower_central_word(int c) {
  if (c < 1) throw Error("lower central word needs c >= 1");
  Word acc = Word::generator(1);
  for (int i = 2; i <= c + 1; ++i) {
    acc = Word::commutator(acc, Word::generator(i));
  }
  return acc;
}

}  // namespace vembed
