// propspan/utf8.hpp

// Copyright 2026  The Propspan Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPSPAN_UTF8_HPP_
#define PROPSPAN_UTF8_HPP_

#include <string>
#include <string_view>

namespace propspan {

// All annotation offsets count Unicode code points, so article bytes are
// decoded once up front and every later computation indexes code points.

// Strict decoder: rejects truncated or overlong sequences, surrogates and
// out-of-range code points. Throws ParseError with the byte offset.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);

// ASCII whitespace; newlines never occur inside a sentence.
inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' || c == U'\v' ||
         c == U'\f';
}

}  // namespace propspan

#endif  // PROPSPAN_UTF8_HPP_
