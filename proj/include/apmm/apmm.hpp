// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "apmm/agreement.hpp"
#include "apmm/builtin_model.hpp"
#include "apmm/case_studies.hpp"
#include "apmm/consolidation.hpp"
#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/model_document.hpp"
#include "apmm/rating.hpp"
#include "apmm/rating_engine.hpp"
#include "apmm/report.hpp"
#include "apmm/response.hpp"
#include "apmm/response_file.hpp"
