/*
 * Copyright (c) Meta Platforms, Inc. and affiliates.
 *
 * This source code is licensed under the MIT license found in the
 * LICENSE file in the root directory of this source tree.
 */

package com.facebook.react.module.model;

import java.util.Map;

/** Interface for auto-generated class by ReactModuleSpecProcessor. */
public interface ReactModuleInfoProvider {

  Map<String, ReactModuleInfo> getReactModuleInfos();
}
