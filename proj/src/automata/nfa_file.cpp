#include <cctype>
#include <fstream>
#include <sstream>

#include "deriv/automata.hpp"
#include "deriv/error.hpp"

namespace deriv::automata {

Nfa parse_nfa(const std::string& text) {
  Nfa n;
  std::size_t offset = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string word; in >> word;) words.push_back(word);
    if (words.empty()) continue;

    const std::string& key = words[0];
    auto want = [&](std::size_t count) {
      if (words.size() != count + 1)
        throw SyntaxError(start, "'" + key + "' takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"));
    };
    if (key == "state") {
      want(1);
      n.states.insert(words[1]);
    } else if (key == "final") {
      want(1);
      n.finals.insert(words[1]);
    } else if (key == "letter") {
      want(1);
      n.alphabet.insert(words[1]);
    } else if (key == "trans") {
      want(3);
      n.transitions.insert({words[1], words[2], words[3]});
    } else {
      throw SyntaxError(start, "unknown directive '" + key + "'");
    }
  }
  n.validate();
  return n;
}

std::string print_nfa(const Nfa& n) {
  std::string out;
  for (const auto& s : n.states) out += "state " + s + "\n";
  for (const auto& q : n.finals) out += "final " + q + "\n";
  for (const auto& a : n.alphabet) out += "letter " + a + "\n";
  for (const auto& t : n.transitions) out += "trans " + t.from + " " + t.letter + " " + t.to + "\n";
  return out;
}

Nfa load_nfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidAutomaton, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_nfa(buf.str());
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.find_first_of(", \t\n") == std::string::npos) {
    for (char c : text) w.emplace_back(1, c);
    return w;
  }
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) w.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) w.push_back(std::move(cur));
  return w;
}

std::string print_word(const Word& w) {
  bool single = true;
  for (const auto& a : w) single = single && a.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single) out += ",";
    out += w[i];
  }
  // A lone multi-character letter needs a separator to read back as one letter.
  if (w.size() == 1 && !single) out += ",";
  return out;
}

}  // namespace deriv::automata
