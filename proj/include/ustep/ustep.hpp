#pragma once

// Umbrella header: the miner, snapshots and the evaluation helpers.

#include "ustep/config.hpp"
#include "ustep/errors.hpp"
#include "ustep/miner.hpp"
#include "ustep/preprocess.hpp"
#include "ustep/snapshot.hpp"
#include "ustep/stats.hpp"
#include "ustep/template.hpp"
#include "ustep/token.hpp"
#include "ustep/tree.hpp"

#include "ustep/eval/accuracy.hpp"
#include "ustep/eval/dataset.hpp"
#include "ustep/eval/report_json.hpp"
#include "ustep/eval/robustness.hpp"
#include "ustep/eval/sweep.hpp"
#include "ustep/eval/throughput.hpp"
