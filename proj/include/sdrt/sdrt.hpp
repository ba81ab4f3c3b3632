#pragma once

#include "sdrt/closure.hpp"
#include "sdrt/corpus.hpp"
#include "sdrt/document.hpp"
#include "sdrt/errors.hpp"
#include "sdrt/frontier.hpp"
#include "sdrt/log.hpp"
#include "sdrt/relations.hpp"
#include "sdrt/report.hpp"
#include "sdrt/sdrs.hpp"
#include "sdrt/validator.hpp"
