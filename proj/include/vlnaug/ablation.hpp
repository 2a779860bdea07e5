#pragma once

#include <string>
#include <string_view>
#include <unordered_map>

namespace vlnaug {

enum class PosTag { kNoun, kAdjective, kOther };
enum class AblationMode { kNouns, kAdjectives, kNounsAdjectives, kAll };

class PosLexicon {
 public:
  // Throws vlnaug::Error when the token is already present.
  void add(std::string token, PosTag tag);
  // Unknown tokens are kOther.
  PosTag tag(std::string_view token) const;
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, PosTag> tags_;
};

// `token<TAB>tag` lines with tag ∈ {noun, adjective, other}. Blank lines are
// skipped. Throws ParseError with the line number on bad input.
PosLexicon load_lexicon(std::string_view text);

// Throws vlnaug::Error for unknown names.
AblationMode parse_ablation_mode(std::string_view name);
const char* ablation_mode_name(AblationMode mode);

// Tokenizes like the supervision export, drops tokens whose tag the mode
// removes, and rejoins with single spaces.
std::string ablate(std::string_view instruction, AblationMode mode, const PosLexicon& lex);

}  // namespace vlnaug
