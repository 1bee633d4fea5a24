#include "algebrarium/cube.hpp"

#include <algorithm>

#include "algebrarium/error.hpp"

namespace algebrarium::cube {
namespace {

struct AxisBlock {
  int axis;
  int primary_turns;    // R, U or F
  int secondary_turns;  // L, D or B
};

Face face_of(int axis, bool primary) { return static_cast<Face>(axis * 2 + (primary ? 0 : 1)); }

using Vec3 = std::array<int, 3>;

struct Sticker {
  Vec3 position;
  Vec3 normal;
  friend bool operator==(const Sticker&, const Sticker&) = default;
};

Vec3 face_normal(Face f) {
  Vec3 n{0, 0, 0};
  n[axis_of(f)] = is_primary(f) ? 1 : -1;
  return n;
}

int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Quarter turn clockwise as seen from outside the face: rotation by -90
// degrees about the outward normal n, v' = n (n.v) - n x v.
Vec3 rotate_clockwise(const Vec3& n, const Vec3& v) {
  const Vec3 c = cross(n, v);
  const int d = dot(n, v);
  return {n[0] * d - c[0], n[1] * d - c[1], n[2] * d - c[2]};
}

const std::vector<Sticker>& stickers() {
  static const std::vector<Sticker> all = [] {
    std::vector<Sticker> out;
    for (int x = -1; x <= 1; ++x) {
      for (int y = -1; y <= 1; ++y) {
        for (int z = -1; z <= 1; ++z) {
          const Vec3 p{x, y, z};
          const int nonzero = (x != 0) + (y != 0) + (z != 0);
          if (nonzero < 2) continue;  // core and face centers never move
          for (int a = 0; a < 3; ++a) {
            if (p[a] == 0) continue;
            Vec3 n{0, 0, 0};
            n[a] = p[a];
            out.push_back({p, n});
          }
        }
      }
    }
    return out;
  }();
  return all;
}

}  // namespace

char face_char(Face f) noexcept {
  static constexpr char kChars[] = {'R', 'L', 'U', 'D', 'F', 'B'};
  return kChars[static_cast<int>(f)];
}

std::optional<Face> parse_face(char c) noexcept {
  for (Face f : kFaces) {
    if (face_char(f) == c) return f;
  }
  return std::nullopt;
}

std::vector<CubeToken> canonical_moves(std::span<const CubeToken> tokens) {
  std::vector<AxisBlock> blocks;
  for (const auto& t : tokens) {
    const int axis = axis_of(t.face);
    const int turns = t.turns % 4;
    if (turns == 0) continue;
    if (blocks.empty() || blocks.back().axis != axis) blocks.push_back({axis, 0, 0});
    auto& top = blocks.back();
    int& slot = is_primary(t.face) ? top.primary_turns : top.secondary_turns;
    slot = (slot + turns) % 4;
    // An emptied block exposes its predecessor, which the next move may extend.
    if (top.primary_turns == 0 && top.secondary_turns == 0) blocks.pop_back();
  }
  std::vector<CubeToken> out;
  out.reserve(blocks.size() * 2);
  for (const auto& b : blocks) {
    if (b.primary_turns) out.push_back({face_of(b.axis, true), static_cast<std::uint8_t>(b.primary_turns)});
    if (b.secondary_turns) out.push_back({face_of(b.axis, false), static_cast<std::uint8_t>(b.secondary_turns)});
  }
  return out;
}

Element cube_canonicalize(std::span<const CubeToken> tokens) { return Element::cube(tokens); }

std::vector<CubeToken> parse_tokens(std::string_view text) {
  std::vector<CubeToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;
    if (token == kIdentityToken) continue;
    auto face = parse_face(token[0]);
    const std::string_view mod = token.substr(1);
    std::uint8_t turns = 0;
    if (mod.empty()) {
      turns = 1;
    } else if (mod == "2") {
      turns = 2;
    } else if (mod == "#" || mod == "'") {
      turns = 3;
    }
    if (!face || turns == 0) {
      throw Error(ErrorCode::ParseError, "bad cube move '" + std::string(token) + "'");
    }
    out.push_back({*face, turns});
  }
  return out;
}

std::string render_tokens(std::span<const CubeToken> tokens) {
  if (tokens.empty()) return std::string(kIdentityToken);
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(face_char(t.face));
    switch (t.turns % 4) {
      case 2: out.push_back('2'); break;
      case 3: out.push_back('#'); break;
      default: break;
    }
  }
  return out;
}

Element parse(std::string_view text) {
  auto tokens = parse_tokens(text);
  return Element::cube(tokens);
}

std::string render(const Element& e) { return render_tokens(e.as<MoveSequence>().moves); }

StickerPermutation identity_permutation() noexcept {
  StickerPermutation p{};
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

StickerPermutation face_turn_permutation(Face f) {
  const auto& all = stickers();
  const Vec3 n = face_normal(f);
  StickerPermutation perm = identity_permutation();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (dot(all[i].position, n) != 1) continue;
    const Sticker moved{rotate_clockwise(n, all[i].position), rotate_clockwise(n, all[i].normal)};
    auto it = std::find(all.begin(), all.end(), moved);
    perm[i] = static_cast<std::uint8_t>(it - all.begin());
  }
  return perm;
}

StickerPermutation sticker_permutation(std::span<const CubeToken> tokens) {
  static const std::array<StickerPermutation, 6> kTurns = [] {
    std::array<StickerPermutation, 6> t{};
    for (Face f : kFaces) t[static_cast<int>(f)] = face_turn_permutation(f);
    return t;
  }();
  StickerPermutation where = identity_permutation();
  for (const auto& tok : tokens) {
    const auto& turn = kTurns[static_cast<int>(tok.face)];
    for (int q = 0; q < tok.turns % 4; ++q) {
      for (auto& slot : where) slot = turn[slot];
    }
  }
  return where;
}

StickerPermutation cube_permutation(const Element& e) { return sticker_permutation(e.as<MoveSequence>().moves); }

}  // namespace algebrarium::cube
