#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "polycomp/alphabet.hpp"
#include "polycomp/codecs.hpp"

namespace polycomp {

// Frame layout, with '#' the sentinel character:
//   #p<tag><payload>#   any codec; tag = codec_tag(codec, transform)
//   #q<payload>#        poly over consecutive deltas, VAR branch ('0' dropped)
//   #r<payload>#        poly over consecutive deltas, BIG branch with S = 1
//   #s<payload>#        poly over consecutive deltas, BIG branch with S = 2
// A sentinel in the surrounding text is written twice.
inline constexpr std::size_t kDefaultBudget = 90;

struct FramedMessage {
  std::string text;
  std::size_t payload_start = 0;
  std::size_t payload_length = 0;
  char sentinel = 'p';
  std::optional<std::string> warning;  // set when text exceeds the budget
};

struct Unframed {
  std::string message;
  Encoded encoded;
  char sentinel = 'p';
};

// Canonical character 2*codec + (1 for consecutive deltas): '0'..'N'.
char codec_tag(CodecId codec, Transform t);
std::pair<CodecId, Transform> parse_codec_tag(char tag);

std::string escape_message(std::string_view message, char sentinel = '#');

FramedMessage frame(std::string_view message, const Encoded& enc, const Alphabet& a = Alphabet::canonical(),
                    std::size_t budget = kDefaultBudget);
// The frame may sit anywhere in the text; text after it is appended to the
// message.
Unframed unframe(std::string_view text, const Alphabet& a = Alphabet::canonical());

}  // namespace polycomp
