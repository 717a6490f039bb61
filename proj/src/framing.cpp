#include "polycomp/framing.hpp"

#include <string>

#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr std::size_t kTagCount = 2 * kAllCodecs.size();

std::size_t codec_index(CodecId id) {
  for (std::size_t i = 0; i < kAllCodecs.size(); ++i) {
    if (kAllCodecs[i] == id) return i;
  }
  throw Error(Errc::InvalidArgument, "unknown codec");
}

}  // namespace

char codec_tag(CodecId codec, Transform t) {
  return Alphabet::canonical().char_at(2 * codec_index(codec) + (t == Transform::DeltaConsec ? 1 : 0));
}

std::pair<CodecId, Transform> parse_codec_tag(char tag) {
  auto idx = Alphabet::canonical().index_of(tag);
  if (!idx || *idx >= kTagCount) {
    throw Error(Errc::UnknownSentinel, std::string("unknown codec tag '") + tag + "'");
  }
  return {kAllCodecs[*idx / 2], (*idx % 2) ? Transform::DeltaConsec : Transform::DeltaMin};
}

std::string escape_message(std::string_view message, char sentinel) {
  std::string out;
  out.reserve(message.size());
  for (char c : message) {
    out.push_back(c);
    if (c == sentinel) out.push_back(c);
  }
  return out;
}

FramedMessage frame(std::string_view message, const Encoded& enc, const Alphabet& a, std::size_t budget) {
  const char hash = a.reserved().sentinel;
  if (enc.payload.find(hash) != std::string::npos) {
    throw Error(Errc::InvalidArgument, "payload contains the sentinel character");
  }
  FramedMessage out;
  out.text = escape_message(message, hash);
  std::string_view body = enc.payload;
  std::string head;
  if (enc.codec == CodecId::Poly && enc.transform == Transform::DeltaConsec && !body.empty()) {
    if (poly_uses_var(enc, a)) {
      out.sentinel = 'q';
    } else {
      auto s = a.index_of(body.front());
      if (s && *s == 1) out.sentinel = 'r';
      if (s && *s == 2) out.sentinel = 's';
    }
  }
  if (out.sentinel == 'p') {
    head = {hash, 'p', codec_tag(enc.codec, enc.transform)};
  } else {
    head = {hash, out.sentinel};
    body.remove_prefix(1);
  }
  out.text += head;
  out.payload_start = out.text.size();
  out.payload_length = body.size();
  out.text += body;
  out.text.push_back(hash);
  if (out.text.size() > budget) {
    out.warning = "message is " + std::to_string(out.text.size()) + " characters, budget " + std::to_string(budget);
  }
  return out;
}

Unframed unframe(std::string_view text, const Alphabet& a) {
  const char hash = a.reserved().sentinel;
  Unframed out;
  std::size_t i = 0;
  bool found = false;
  while (i < text.size()) {
    char c = text[i];
    if (c != hash) {
      out.message.push_back(c);
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) {
      throw Error(Errc::UnterminatedFrame, "lone sentinel at end of text", i);
    }
    char next = text[i + 1];
    if (next == hash) {
      out.message.push_back(hash);
      i += 2;
      continue;
    }
    if (found) throw Error(Errc::UnknownSentinel, "second frame in text", i);
    if (next != 'p' && next != 'q' && next != 'r' && next != 's') {
      throw Error(Errc::UnknownSentinel, std::string("unknown sentinel '") + hash + next + "'", i);
    }
    std::size_t start = i + 2;
    if (next == 'p') {
      if (start >= text.size()) throw Error(Errc::UnterminatedFrame, "frame ends before codec tag", i);
      auto [codec, t] = parse_codec_tag(text[start]);
      out.encoded.codec = codec;
      out.encoded.transform = t;
      ++start;
    } else {
      out.encoded.codec = CodecId::Poly;
      out.encoded.transform = Transform::DeltaConsec;
    }
    auto end = text.find(hash, start);
    if (end == std::string_view::npos) throw Error(Errc::UnterminatedFrame, "frame has no closing sentinel", i);
    std::string_view body = text.substr(start, end - start);
    switch (next) {
      case 'q': out.encoded.payload.push_back(a.char_at(0)); break;
      case 'r': out.encoded.payload.push_back(a.char_at(1)); break;
      case 's': out.encoded.payload.push_back(a.char_at(2)); break;
      default: break;
    }
    out.encoded.payload += body;
    out.sentinel = next;
    found = true;
    i = end + 1;
  }
  if (!found) throw Error(Errc::MissingFrame, "no frame in text");
  return out;
}

}  // namespace polycomp
