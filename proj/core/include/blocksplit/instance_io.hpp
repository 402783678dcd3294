// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <string>

#include "blocksplit/experiments.hpp"

namespace blocksplit {

/// Plain-text instance container.
///
/// Layout: a `blocksplit-instance v1` magic line, a `kind` line
/// (`group-lasso` or `image-recovery`), then one `key value...` line per
/// field with numbers in full `%.17g` precision, terminated by `end`.
/// The image blur matrix is not stored; it is rebuilt deterministically from
/// the recorded side/sigma/radius parameters.
void save_instance(std::ostream& out, const GroupLassoInstance& inst);
void save_instance(std::ostream& out, const ImageRecoveryInstance& inst);
void save_instance_file(const std::string& path, const GroupLassoInstance& inst);
void save_instance_file(const std::string& path, const ImageRecoveryInstance& inst);

enum class InstanceKind { group_lasso, image_recovery };

/// Peeks at the kind line without consuming the stream position guarantees;
/// intended for dispatch before the typed loads below.
InstanceKind peek_instance_kind(std::istream& in);
InstanceKind peek_instance_kind_file(const std::string& path);

GroupLassoInstance load_group_lasso_instance(std::istream& in);
ImageRecoveryInstance load_image_recovery_instance(std::istream& in);
GroupLassoInstance load_group_lasso_instance_file(const std::string& path);
ImageRecoveryInstance load_image_recovery_instance_file(const std::string& path);

/// Plain-text primal-dual point container (`blocksplit-ktpoint v1`).
void save_kt_point(std::ostream& out, const KTPoint& pt);
void save_kt_point_file(const std::string& path, const KTPoint& pt);
KTPoint load_kt_point(std::istream& in);
KTPoint load_kt_point_file(const std::string& path);

}  // namespace blocksplit
