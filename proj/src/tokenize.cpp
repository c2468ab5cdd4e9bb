#include "lcscount/tokenize.hpp"

namespace lcscount {

std::string to_string(Tokenization t) {
  switch (t) {
    case Tokenization::Bytes: return "bytes";
    case Tokenization::Codepoints: return "codepoints";
    case Tokenization::Lines: return "lines";
  }
  return "bytes";
}

Sequence decode_utf8(std::string_view text) {
  Sequence out;
  out.reserve(text.size());
  std::size_t pos = 0;
  auto fail = [&](const char* what) {
    throw InvalidUtf8(std::string("invalid UTF-8 at byte ") + std::to_string(pos) + ": " + what);
  };
  while (pos < text.size()) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t extra = 0;
    Symbol cp = 0;
    Symbol min = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, cp = lead & 0x07, min = 0x10000;
    } else {
      fail("bad lead byte");
    }
    if (pos + extra >= text.size() && extra > 0) fail("truncated sequence");
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[pos + k]);
      if ((cont & 0xC0) != 0x80) fail("bad continuation byte");
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min) fail("overlong encoding");
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("code point out of range");
    out.push_back(cp);
    pos += extra + 1;
  }
  return out;
}

Sequence Tokenizer::operator()(std::string_view text) {
  switch (mode_) {
    case Tokenization::Bytes: {
      Sequence out;
      out.reserve(text.size());
      for (char c : text) out.push_back(static_cast<unsigned char>(c));
      return out;
    }
    case Tokenization::Codepoints:
      return decode_utf8(text);
    case Tokenization::Lines: {
      // A trailing newline terminates the last line rather than opening an empty one.
      Sequence out;
      std::size_t start = 0;
      while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto [it, inserted] = lines_.try_emplace(std::string(text.substr(start, end - start)),
                                                 static_cast<Symbol>(lines_.size()));
        out.push_back(it->second);
        start = end + 1;
      }
      return out;
    }
  }
  return {};
}

}  // namespace lcscount
