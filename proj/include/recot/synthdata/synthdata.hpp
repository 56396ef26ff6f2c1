#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "recot/box.hpp"
#include "recot/encoder/encoder.hpp"
#include "recot/io/raster.hpp"

// Procedural cross-view benchmark. A scene of flat-coloured shapes on a smooth
// background is rendered once in the reference (overhead) frame and once
// through a similarity warp as the query view.
namespace recot::synthdata {

using encoder::PromptPoint;

enum class ShapeKind { Rect = 0, Ellipse = 1, LShape = 2 };

// Reference-frame pixel -> query-frame pixel:
//   q = zoom * R(rotation) * (r - anchor) + query_centre
struct Similarity {
  double zoom = 1.0;
  double rotation_deg = 0.0;
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  bool operator==(const Similarity&) const = default;
};

struct SceneConfig {
  std::string preset = "drone";
  int query_h = 64;
  int query_w = 64;
  int ref_h = 128;
  int ref_w = 128;
  int min_objects = 3;
  int max_objects = 8;
  int min_size = 18;  // reference pixels; at least one 16 px feature cell
  int max_size = 32;
  double zoom_min = 0.85;
  double zoom_max = 1.15;
  double max_rotation_deg = 10.0;
  double color_jitter = 0.04;  // relative gain/offset amplitude in the query
  double pixel_noise = 3.0;    // per-pixel noise std, 8-bit units
  double occlusion_prob = 0.0;
  // Test hook: fixed warp instead of the sampled one.
  std::optional<Similarity> warp_override;

  static SceneConfig preset_named(const std::string& name);
  void validate() const;
};

struct CvoglSample {
  std::string sample_id;
  std::uint64_t seed = 0;
  std::string preset;
  io::Raster query;      // 3 x H_q x W_q
  io::Raster reference;  // 3 x H_r x W_r
  io::Raster oracle_mask;  // 1 channel, 255 on the target footprint in the query
  PromptPoint prompt;
  Box gt_box;  // reference frame, normalized
  Similarity warp;
  ShapeKind target_kind = ShapeKind::Rect;

  bool operator==(const CvoglSample& o) const {
    return sample_id == o.sample_id && seed == o.seed && preset == o.preset && query == o.query &&
           reference == o.reference && oracle_mask == o.oracle_mask && prompt.x == o.prompt.x &&
           prompt.y == o.prompt.y && gt_box == o.gt_box && warp == o.warp && target_kind == o.target_kind;
  }
};

// Deterministic in (seed, cfg).
CvoglSample generate_sample(std::uint64_t seed, const SceneConfig& cfg, const std::string& sample_id = "");

struct SplitCounts {
  int train = 2000;
  int val = 200;
  int test = 200;
};

inline const std::vector<std::string> kSplits = {"train", "val", "test"};

// Seed of sample i of a split. Splits own disjoint ranges.
std::uint64_t sample_seed(std::uint64_t dataset_seed, int split_index, int i);

// Writes <root>/{train,val,test}/<id>/ plus manifest.json; returns the content hash.
std::string generate_dataset(const std::filesystem::path& root, std::uint64_t seed, const SceneConfig& cfg,
                             const SplitCounts& counts);

void save_sample(const std::filesystem::path& dir, const CvoglSample& s);
CvoglSample load_sample(const std::filesystem::path& dir);

struct Manifest {
  std::string preset;
  std::uint64_t seed = 0;
  std::string content_hash;
  std::vector<std::string> train, val, test;
  const std::vector<std::string>& split(const std::string& name) const;
};

Manifest read_manifest(const std::filesystem::path& root);

// Loads every sample of a split, checking each against the manifest.
std::vector<CvoglSample> load_split(const std::filesystem::path& root, const std::string& split);

// Brute-force solvability oracle: the query-view target, undone for rotation and
// zoom only, slid over the reference by SSD. Returns the best-matching box.
Box template_match(const CvoglSample& s);

}  // namespace recot::synthdata
