#include "vlnaug/ablation.hpp"

#include <cctype>
#include <vector>

#include "vlnaug/error.hpp"
#include "vlnaug/text.hpp"

namespace vlnaug {

void PosLexicon::add(std::string token, PosTag tag) {
  if (!tags_.emplace(std::move(token), tag).second) {
    throw Error("duplicate lexicon token");
  }
}

PosTag PosLexicon::tag(std::string_view token) const {
  auto it = tags_.find(std::string(token));
  return it == tags_.end() ? PosTag::kOther : it->second;
}

PosLexicon load_lexicon(std::string_view text) {
  PosLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError(line_no, "lexicon", "expected token<TAB>tag");
    }
    const std::string_view token = line.substr(0, tab);
    const std::string_view tag = line.substr(tab + 1);
    if (token.empty()) throw ParseError(line_no, "lexicon", "empty token");
    for (char c : token) {
      const auto uc = static_cast<unsigned char>(c);
      if (std::isspace(uc) || std::isupper(uc)) {
        throw ParseError(line_no, "lexicon", "token must be a lowercase word");
      }
    }
    PosTag t;
    if (tag == "noun") {
      t = PosTag::kNoun;
    } else if (tag == "adjective") {
      t = PosTag::kAdjective;
    } else if (tag == "other") {
      t = PosTag::kOther;
    } else {
      throw ParseError(line_no, "lexicon", "unknown tag '" + std::string(tag) + "'");
    }
    try {
      lex.add(std::string(token), t);
    } catch (const Error&) {
      throw ParseError(line_no, "lexicon", "duplicate token '" + std::string(token) + "'");
    }
  }
  return lex;
}

AblationMode parse_ablation_mode(std::string_view name) {
  if (name == "nouns") return AblationMode::kNouns;
  if (name == "adjectives") return AblationMode::kAdjectives;
  if (name == "nouns_adjectives") return AblationMode::kNounsAdjectives;
  if (name == "all") return AblationMode::kAll;
  throw Error("unknown ablation mode '" + std::string(name) + "'");
}

const char* ablation_mode_name(AblationMode mode) {
  switch (mode) {
    case AblationMode::kNouns:
      return "nouns";
    case AblationMode::kAdjectives:
      return "adjectives";
    case AblationMode::kNounsAdjectives:
      return "nouns_adjectives";
    case AblationMode::kAll:
      return "all";
  }
  return "?";
}

std::string ablate(std::string_view instruction, AblationMode mode, const PosLexicon& lex) {
  if (mode == AblationMode::kAll) return "";
  std::vector<std::string> kept;
  for (auto& tok : tokenize(instruction)) {
    const PosTag tag = lex.tag(tok);
    const bool drop =
        (tag == PosTag::kNoun &&
         (mode == AblationMode::kNouns || mode == AblationMode::kNounsAdjectives)) ||
        (tag == PosTag::kAdjective &&
         (mode == AblationMode::kAdjectives || mode == AblationMode::kNounsAdjectives));
    if (!drop) kept.push_back(std::move(tok));
  }
  return join_tokens(kept);
}

}  // namespace vlnaug
