#include "sccat/words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sccat {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

namespace {

std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter a = w[(cand + i) % n];
      const Letter b = w[(best + i) % n];
      if (a < b) {
        best = cand;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

}  // namespace

CyclicWord::CyclicWord(Word letters) {
  if (letters.empty()) throw std::invalid_argument("CyclicWord: empty word");
  if (!is_cyclically_reduced(letters))
    throw std::invalid_argument("CyclicWord: word is not cyclically reduced");
  std::rotate(letters.begin(), letters.begin() + least_rotation(letters), letters.end());
  letters_ = std::move(letters);
}

Letter CyclicWord::at(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(letters_.size());
  return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Word CyclicWord::rotation(std::size_t offset) const {
  Word out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(static_cast<std::ptrdiff_t>(offset + i)));
  return out;
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(sccat::inverse(letters_)); }

std::optional<CyclicWord> cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  return CyclicWord(Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
                         r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

PowerDecomposition proper_power_root(const CyclicWord& w) {
  const std::size_t n = w.size();
  const Word& l = w.letters();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = l[i] == l[i - period];
    if (periodic)
      return {CyclicWord(Word(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(period))),
              n / period};
  }
  return {w, 1};  // unreachable: period n always works
}

CyclicWord relator_key(const CyclicWord& w) { return std::min(w, w.inverse()); }

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Presentation Presentation::create(std::vector<std::string> generator_names,
                                  const std::vector<Word>& raw_relators) {
  Presentation p;
  p.generators_ = std::move(generator_names);
  std::set<CyclicWord> seen;
  for (std::size_t i = 0; i < raw_relators.size(); ++i) {
    const Word& raw = raw_relators[i];
    for (Letter l : raw)
      if (l.generator >= p.generators_.size())
        throw std::invalid_argument("relator " + std::to_string(i + 1) +
                                    ": generator index out of range");
    auto reduced = cyclic_reduce(raw);
    if (!reduced)
      throw TrivialRelatorError("relator " + std::to_string(i + 1) + " (" + p.format_word(raw) +
                                ") reduces to the empty word");
    if (reduced->size() != raw.size())
      p.log_.push_back("relator " + std::to_string(i + 1) + ": reduced " + p.format_word(raw) +
                       " to " + p.format_word(reduced->letters()));
    if (!seen.insert(relator_key(*reduced)).second) {
      p.log_.push_back("warning: relator " + std::to_string(i + 1) + " (" +
                       p.format_word(reduced->letters()) +
                       ") duplicates an earlier relator up to rotation and inversion; deleted");
      continue;
    }
    p.relators_.push_back(std::move(*reduced));
  }
  return p;
}

std::size_t Presentation::total_length() const {
  std::size_t total = 0;
  for (const auto& r : relators_) total += r.size();
  return total;
}

std::size_t Presentation::min_relator_length() const {
  std::size_t g = 0;
  for (const auto& r : relators_) g = g == 0 ? r.size() : std::min(g, r.size());
  return g;
}

std::string Presentation::format_letter(Letter l) const {
  std::string name = l.generator < generators_.size() ? generators_[l.generator]
                                                      : "#" + std::to_string(l.generator);
  return l.inverted ? name + "-" : name;
}

std::string Presentation::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

namespace {

bool valid_generator_name(std::string_view name) {
  if (name.empty() || name.back() == '-') return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; });
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), base_column + start});
  }
  return out;
}

class TokenResolver {
 public:
  explicit TokenResolver(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      index_.emplace(names[i], static_cast<std::uint32_t>(i));
  }

  std::optional<Letter> resolve(std::string_view tok) const {
    bool inv = false;
    if (!tok.empty() && tok.back() == '-') {
      inv = true;
      tok.remove_suffix(1);
    }
    auto it = index_.find(std::string(tok));
    if (it == index_.end()) return std::nullopt;
    return Letter{it->second, inv};
  }

 private:
  std::map<std::string, std::uint32_t> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<std::vector<std::string>> generators;
  struct PendingRelator {
    std::vector<Token> tokens;
    std::size_t line;
  };
  std::vector<PendingRelator> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size()) continue;

    std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos)
      throw ParseError("expected 'generators:' or 'relator:'", line_no, first + 1);
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    auto tokens = split_tokens(line.substr(colon + 1), colon + 2);

    if (key == "generators") {
      if (generators) throw ParseError("duplicate 'generators:' line", line_no, first + 1);
      std::vector<std::string> names;
      std::set<std::string> unique;
      for (const auto& t : tokens) {
        if (!valid_generator_name(t.text))
          throw ParseError("invalid generator name '" + t.text + "'", line_no, t.column);
        if (!unique.insert(t.text).second)
          throw ParseError("duplicate generator name '" + t.text + "'", line_no, t.column);
        names.push_back(t.text);
      }
      generators = std::move(names);
    } else if (key == "relator") {
      if (tokens.empty()) throw ParseError("empty relator", line_no, colon + 2);
      pending.push_back({std::move(tokens), line_no});
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, first + 1);
    }
    if (end == text.size()) break;
  }

  if (!generators) throw ParseError("missing 'generators:' line", line_no, 1);
  if (pending.empty()) throw ParseError("no 'relator:' lines", line_no, 1);

  TokenResolver resolver(*generators);
  std::vector<Word> raw;
  for (const auto& rel : pending) {
    Word w;
    for (const auto& t : rel.tokens) {
      auto l = resolver.resolve(t.text);
      if (!l) throw ParseError("unknown generator token '" + t.text + "'", rel.line, t.column);
      w.push_back(*l);
    }
    raw.push_back(std::move(w));
  }
  return Presentation::create(std::move(*generators), raw);
}

Presentation parse_presentation_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw ParseError("expected an object with 'generators' and 'relators'", 1, 1);
  if (!j["generators"].is_array() || !j["relators"].is_array())
    throw ParseError("'generators' and 'relators' must be arrays", 1, 1);

  std::vector<std::string> names;
  std::set<std::string> unique;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings", 1, 1);
    auto name = g.get<std::string>();
    if (!valid_generator_name(name)) throw ParseError("invalid generator name '" + name + "'", 1, 1);
    if (!unique.insert(name).second) throw ParseError("duplicate generator name '" + name + "'", 1, 1);
    names.push_back(name);
  }
  if (j["relators"].empty()) throw ParseError("no relators", 1, 1);

  TokenResolver resolver(names);
  std::vector<Word> raw;
  for (const auto& rel : j["relators"]) {
    if (!rel.is_array() || rel.empty()) throw ParseError("each relator must be a nonempty array", 1, 1);
    Word w;
    for (const auto& tok : rel) {
      if (!tok.is_string()) throw ParseError("relator tokens must be strings", 1, 1);
      auto l = resolver.resolve(tok.get<std::string>());
      if (!l) throw ParseError("unknown generator token '" + tok.get<std::string>() + "'", 1, 1);
      w.push_back(*l);
    }
    raw.push_back(std::move(w));
  }
  return Presentation::create(std::move(names), raw);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_presentation_json(text) : parse_presentation(text);
}

std::vector<ClosureElement> symmetrized_closure(const Presentation& p) {
  std::vector<ClosureElement> out;
  std::set<Word> seen;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const CyclicWord& r = p.relators()[i];
    const auto n = static_cast<std::ptrdiff_t>(r.size());
    for (bool inv : {false, true}) {
      for (std::ptrdiff_t o = 0; o < n; ++o) {
        Word w;
        w.reserve(r.size());
        for (std::ptrdiff_t t = 0; t < n; ++t)
          w.push_back(inv ? r.at(o - t).inverse() : r.at(o + t));
        if (seen.insert(w).second)
          out.push_back({std::move(w), i, static_cast<std::size_t>(o), inv});
      }
    }
  }
  return out;
}

DehnReducer::DehnReducer(const Presentation& p) {
  for (auto& e : symmetrized_closure(p)) closure_.push_back(std::move(e.word));
}

Word DehnReducer::reduce(const Word& input) const {
  Word w = free_reduce(input);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < w.size() && !changed; ++s) {
      for (const Word& c : closure_) {
        std::size_t len = 0;
        while (len < c.size() && s + len < w.size() && w[s + len] == c[len]) ++len;
        if (2 * len <= c.size()) continue;
        // c = 1, so its first `len` letters equal the inverse of the rest
        Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        const Word rest = inverse(Word(c.begin() + static_cast<std::ptrdiff_t>(len), c.end()));
        out.insert(out.end(), rest.begin(), rest.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(s + len), w.end());
        w = free_reduce(out);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace sccat
