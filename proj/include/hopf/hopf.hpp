#pragma once

#include <hopf/case_table.hpp>
#include <hopf/classify.hpp>
#include <hopf/devmap.hpp>
#include <hopf/group.hpp>
#include <hopf/hopf_surface.hpp>
#include <hopf/json_io.hpp>
#include <hopf/normal_form.hpp>
#include <hopf/scalar.hpp>
#include <hopf/sections.hpp>
#include <hopf/verify.hpp>
