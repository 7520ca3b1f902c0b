/*
 * Copyright (c) Meta Platforms, Inc. and affiliates.
 *
 * This source code is licensed under the MIT license found in the
 * LICENSE file in the root directory of this source tree.
 */

package com.facebook.react.modules.network;

public interface ProgressListener {
  void onProgress(long bytesWritten, long contentLength, boolean done);
}
