#include "cubulate/criteria.hpp"

#include "cubulate/errors.hpp"

#include <map>
#include <string>

namespace cubulate {

InducedWallspace induce_wallspace(const Wallspace& ambient,
                                  const CayleyBall& sub_ball,
                                  const std::vector<Word>& letter_images,
                                  int sub_margin) {
  const CayleyBall& amb_ball = *ambient.ball;
  const GroupPresentation& amb_group = amb_ball.group();
  const Alphabet& sub_alpha = sub_ball.group().alphabet();

  if (letter_images.size() != sub_alpha.size())
    fail(ErrorKind::MalformedInput, "induce",
         "need one ambient image per subgroup letter");
  for (Letter l = 0; l < sub_alpha.size(); ++l) {
    Word prod = letter_images[l];
    const Word& partner = letter_images[sub_alpha.inverse(l)];
    prod.insert(prod.end(), partner.begin(), partner.end());
    if (!amb_group.is_identity(prod))
      fail(ErrorKind::MalformedInput, "induce",
           "image of letter " + sub_alpha.name(l) +
               " does not invert to the image of its partner");
  }

  InducedWallspace iw;
  iw.space.ball = &sub_ball;
  iw.space.margin = sub_margin;
  iw.image.resize(sub_ball.size());

  std::map<std::uint32_t, std::uint32_t> preimage;
  for (std::uint32_t v = 0; v < sub_ball.size(); ++v) {
    Word amb_word;
    for (Letter l : sub_ball.word(v)) {
      const Word& piece = letter_images[l];
      amb_word.insert(amb_word.end(), piece.begin(), piece.end());
    }
    auto at = amb_ball.locate(amb_word);
    if (!at || amb_ball.distance(*at) > ambient.trust_radius())
      fail(ErrorKind::Scale, "induce",
           "subgroup ball leaves the ambient trust ball at " +
               sub_alpha.print_word(sub_ball.word(v)));
    auto [it, fresh] = preimage.insert({*at, v});
    if (!fresh)
      fail(ErrorKind::Structural, "induce",
           "subgroup elements " + sub_alpha.print_word(sub_ball.word(it->second)) +
               " and " + sub_alpha.print_word(sub_ball.word(v)) +
               " collapse in the ambient group");
    iw.image[v] = *at;
  }

  std::map<std::vector<std::uint8_t>, std::uint32_t> traces;
  for (std::uint32_t wi = 0; wi < ambient.walls.size(); ++wi) {
    const Wall& w = ambient.walls[wi];
    std::vector<std::uint8_t> side(sub_ball.size());
    for (std::uint32_t v = 0; v < sub_ball.size(); ++v)
      side[v] = w.side[iw.image[v]];

    std::uint32_t left = 0, right = 0;
    for (std::uint8_t s : side) {
      left += s == 0;
      right += s == 1;
    }
    if (!left || !right) {
      ++iw.discarded_one_sided;
      continue;
    }
    for (std::uint8_t s : side) {
      if (s == 2) continue;
      if (s == 1)
        for (std::uint8_t& t : side)
          if (t <= 1) t ^= 1;
      break;
    }

    auto [it, fresh] =
        traces.insert({side, static_cast<std::uint32_t>(iw.space.walls.size())});
    if (fresh) {
      Wall trace;
      trace.kind = WallKind::Abstract;
      trace.label = "trace of " + (w.label.empty()
                                       ? "ambient wall " + std::to_string(wi)
                                       : w.label);
      trace.side = it->first;
      iw.space.walls.push_back(std::move(trace));
      iw.provenance.push_back({wi});
    } else {
      iw.provenance[it->second].push_back(wi);
    }
  }
  return iw;
}

} // namespace cubulate
