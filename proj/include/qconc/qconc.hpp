#pragma once

#include "qconc/laurent.hpp"
#include "qconc/factor.hpp"
#include "qconc/cyclotomic.hpp"
#include "qconc/seifert.hpp"
#include "qconc/cable.hpp"
#include "qconc/obstruct.hpp"
#include "qconc/homcob.hpp"
#include "qconc/io.hpp"
