#pragma once

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/gallery.hpp"
#include "lcelab/hyperimmunity.hpp"
#include "lcelab/io.hpp"
#include "lcelab/machine.hpp"
#include "lcelab/natural_set.hpp"
#include "lcelab/parallel.hpp"
#include "lcelab/rational.hpp"
#include "lcelab/reducibility.hpp"
#include "lcelab/registry.hpp"
#include "lcelab/speedability.hpp"
#include "lcelab/uniformize.hpp"
