#pragma once

#include "json.hpp"
#include "recot/harness/harness.hpp"
#include "recot/synthdata/synthdata.hpp"

// JSON mirrors of the config structs. Readers apply a partial object on top of
// the existing values and reject unknown keys.
namespace recot::harness {

using nlohmann::json;

json to_json(const encoder::EncoderConfig& c);
json to_json(const ModelConfig& c);
json to_json(const TrainConfig& c);  // without the nested model
json to_json(const synthdata::SceneConfig& c);

void apply_json(const json& j, encoder::EncoderConfig& c);
void apply_json(const json& j, ModelConfig& c);
void apply_json(const json& j, TrainConfig& c);
void apply_json(const json& j, synthdata::SceneConfig& c);

json to_json(const EvalReport& r);
json to_json(const losses::LossBreakdown& b);

}  // namespace recot::harness
