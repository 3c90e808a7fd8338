#pragma once

#include "senti/builtin.hpp"
#include "senti/classify.hpp"
#include "senti/config.hpp"
#include "senti/core.hpp"
#include "senti/csv.hpp"
#include "senti/ensemble.hpp"
#include "senti/ingest.hpp"
#include "senti/lexicon.hpp"
#include "senti/metrics.hpp"
#include "senti/report.hpp"
#include "senti/spelling.hpp"
#include "senti/subprocess.hpp"
#include "senti/transcribe.hpp"
#include "senti/vad.hpp"
#include "senti/wav.hpp"
