#include "mualcq/model_io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "mualcq/errors.hpp"

namespace mualcq {

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ModelFormatError("line " + std::to_string(line_no_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<std::string> name_list() {
    expect('[');
    std::vector<std::string> out;
    if (accept(']')) return out;
    do {
      out.push_back(word());
    } while (accept(','));
    expect(']');
    return out;
  }

  std::vector<std::pair<std::string, std::string>> pair_list() {
    expect('[');
    std::vector<std::pair<std::string, std::string>> out;
    if (accept(']')) return out;
    do {
      expect('(');
      std::string a = word();
      expect(',');
      std::string b = word();
      expect(')');
      out.emplace_back(std::move(a), std::move(b));
    } while (accept(','));
    expect(']');
    return out;
  }

 private:
  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

}  // namespace

ModelText parse_model_text(std::string_view text, std::string_view relation_keyword) {
  ModelText m;
  std::set<std::string> known;
  bool have_domain = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    LineReader r(raw, line_no);
    if (r.at_end()) continue;
    std::string head = r.word();
    if (head == "domain") {
      if (have_domain) r.fail("duplicate domain line");
      r.expect(':');
      m.domain = r.name_list();
      if (m.domain.empty()) r.fail("the domain must not be empty");
      for (const auto& e : m.domain)
        if (!known.insert(e).second) r.fail("'" + e + "' listed twice in the domain");
      have_domain = true;
    } else if (head == "concept" || head == relation_keyword) {
      if (!have_domain) r.fail("the domain line must come first");
      std::string name = r.word();
      r.expect(':');
      if (head == "concept") {
        if (m.sets.contains(name)) r.fail("concept '" + name + "' listed twice");
        m.sets[name] = r.name_list();
        for (const auto& e : m.sets[name])
          if (!known.contains(e)) r.fail("'" + e + "' is not in the domain");
      } else {
        if (m.relations.contains(name)) r.fail(std::string(relation_keyword) + " '" + name + "' listed twice");
        m.relations[name] = r.pair_list();
        for (const auto& [a, b] : m.relations[name])
          for (const auto* e : {&a, &b})
            if (!known.contains(*e)) r.fail("'" + *e + "' is not in the domain");
      }
    } else {
      r.fail("unknown entry '" + head + "'");
    }
    if (!r.at_end()) r.fail("trailing characters");
  }
  if (!have_domain) throw ModelFormatError("missing domain line");
  return m;
}

std::string format_model_text(const ModelText& m, std::string_view relation_keyword) {
  std::ostringstream out;
  out << "domain: [" << join(m.domain) << "]\n";
  for (const auto& [name, elems] : m.sets) out << "concept " << name << ": [" << join(elems) << "]\n";
  for (const auto& [name, pairs] : m.relations) {
    out << relation_keyword << ' ' << name << ": [";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out << (i ? ", " : "") << '(' << pairs[i].first << ',' << pairs[i].second << ')';
    out << "]\n";
  }
  return out.str();
}

Interpretation interpretation_from_text(const ModelText& m) {
  Interpretation i(m.domain);
  auto index = [&](const std::string& name) {
    auto idx = i.index_of(name);
    if (!idx) throw ModelFormatError("'" + name + "' is not in the domain");
    return *idx;
  };
  for (const auto& [name, elems] : m.sets) {
    i.declare_concept(name);
    for (const auto& e : elems) i.add_to_concept(name, index(e));
  }
  for (const auto& [name, pairs] : m.relations) {
    if (m.sets.contains(name)) throw ModelFormatError("'" + name + "' is both a concept and a relation");
    i.declare_role(name);
    for (const auto& [a, b] : pairs) i.add_edge(name, index(a), index(b));
  }
  return i;
}

ModelText text_of(const Interpretation& i) {
  ModelText m;
  m.domain = i.domain();
  for (const auto& [name, ext] : i.concepts()) m.sets[name] = element_names(i, ext);
  for (const auto& [name, rel] : i.roles()) {
    auto& out = m.relations[name];
    for (auto [a, b] : rel.pairs()) out.emplace_back(i.name_of(a), i.name_of(b));
  }
  return m;
}

Interpretation parse_model(std::string_view text) { return interpretation_from_text(parse_model_text(text, "role")); }

std::string print_model(const Interpretation& i) { return format_model_text(text_of(i), "role"); }

}  // namespace mualcq
