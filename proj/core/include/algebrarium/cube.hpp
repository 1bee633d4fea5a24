#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algebrarium/element.hpp"

// Rubik's cube move sequences modulo three rewrite rules:
//   1. a move followed by its inverse vanishes (R R# -> ε),
//   2. consecutive turns of one face add modulo 4, zero turns vanish,
//   3. adjacent opposite faces commute and are ordered R<L, U<D, F<B.
//
// The normal form is computed in one pass over "axis blocks": a maximal run of
// moves on one axis (R/L, U/D, F/B) collapses to at most one primary-face move
// followed by at most one secondary-face move. This is the free product of
// three copies of Z4 x Z4. Termination of the rewrite system itself: rule 1
// and rule 2 shorten the sequence, rule 3 keeps the length and removes one
// inversion between adjacent opposite faces, so (length, inversions)
// decreases lexicographically.
namespace algebrarium::cube {

inline constexpr std::string_view kIdentityToken = "\xCE\xB5";  // "ε"
inline constexpr std::array<Face, 6> kFaces = {Face::R, Face::L, Face::U, Face::D, Face::F, Face::B};

constexpr int axis_of(Face f) noexcept { return static_cast<int>(f) / 2; }
/// R, U and F come first within their axis.
constexpr bool is_primary(Face f) noexcept { return static_cast<int>(f) % 2 == 0; }
constexpr bool opposite(Face a, Face b) noexcept { return a != b && axis_of(a) == axis_of(b); }

char face_char(Face f) noexcept;
std::optional<Face> parse_face(char c) noexcept;

/// Normal form of an arbitrary token list (turns taken modulo 4, 0 allowed).
std::vector<CubeToken> canonical_moves(std::span<const CubeToken> tokens);

Element cube_canonicalize(std::span<const CubeToken> tokens);

/// Parses whitespace-separated moves (modifiers "", "2", "#", "'"); throws ParseError.
std::vector<CubeToken> parse_tokens(std::string_view text);
std::string render_tokens(std::span<const CubeToken> tokens);

Element parse(std::string_view text);
std::string render(const Element& e);

/// Where each of the 48 movable facelets ends up: perm[i] is the new slot of
/// the sticker that started in slot i.
using StickerPermutation = std::array<std::uint8_t, 48>;

StickerPermutation identity_permutation() noexcept;
StickerPermutation face_turn_permutation(Face f);
StickerPermutation sticker_permutation(std::span<const CubeToken> tokens);
StickerPermutation cube_permutation(const Element& e);

}  // namespace algebrarium::cube
