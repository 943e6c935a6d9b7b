// Copyright 2026 The nludiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLUDIAG_PNG_HPP_
#define NLUDIAG_PNG_HPP_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace nludiag {

// Row-major 8-bit RGB canvas with just enough drawing for labeled matrices.
class Canvas {
 public:
  Canvas(int width, int height, std::uint8_t r = 255, std::uint8_t g = 255,
         std::uint8_t b = 255);

  int width() const { return width_; }
  int height() const { return height_; }

  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  void fill_rect(int x, int y, int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  // 5x7 bitmap glyphs (lowercase letters, digits, and basic punctuation),
  // drawn at an integer scale. Unknown characters render as blanks.
  void draw_text(int x, int y, std::string_view text, int scale, std::uint8_t r, std::uint8_t g,
                 std::uint8_t b);

  static int text_width(std::string_view text, int scale);
  static int text_height(int scale);

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Truecolor 8-bit PNG (one IDAT chunk, filter 0 scanlines).
void write_png(const std::filesystem::path& path, const Canvas& canvas);

}  // namespace nludiag

#endif  // NLUDIAG_PNG_HPP_
