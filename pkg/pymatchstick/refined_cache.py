# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from os import listdir, remove
from os.path import exists, isdir, join
from shutil import rmtree
import logging
import re

import datacache
import numpy as np

from .common import text_digest
from .embedding import EmbeddingReadError, read_embedding, write_embedding
from .ingestion import build_embedding
from .refinement import RefineResult, refine, residual
from .segment_list import parse_segments
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

CACHE_BASE_SUBDIR = "pymatchstick"
CACHE_DIR_ENV_KEY = "MSG_CACHE_DIR"

ITERATIONS_HEADER = re.compile(r"^# iterations (\d+)$", re.MULTILINE)


class RefinedCache(object):
    """
    Keeps refined embeddings as .mge files so that catalog graphs are only
    solved once. Files are keyed by graph name and a digest of the stroke
    data, tolerances and iteration limit, so edits to any of them miss the
    cache.
    """

    def __init__(self, cache_directory_path=None):
        """
        Parameters
        ----------
        cache_directory_path : str, optional
            Where to place refined files, by default the datacache
            directory for this package, the pymatchstick sub-directory of
            MSG_CACHE_DIR when that is set.
        """
        if cache_directory_path:
            self._cache_directory_path = cache_directory_path
        else:
            self._cache_directory_path = datacache.get_data_dir(
                subdir=CACHE_BASE_SUBDIR, envkey=CACHE_DIR_ENV_KEY
            )

    @property
    def cache_directory_path(self):
        return self._cache_directory_path

    def _fields(self):
        return (("cache_directory_path", self.cache_directory_path),)

    def __eq__(self, other):
        return other.__class__ is RefinedCache and self._fields() == other._fields()

    def __hash__(self):
        return hash(self._fields())

    def __str__(self):
        return "RefinedCache(%s)" % ", ".join("%s=%s" % kv for kv in self._fields())

    def __repr__(self):
        return str(self)

    def cached_path(self, name, segment_text, tol=DEFAULT_TOLERANCES, max_iter=200):
        digest = text_digest(segment_text, tol.to_json(), str(max_iter))
        return join(self.cache_directory_path, "%s-%s.mge" % (name, digest))

    def _load(self, path, raw):
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        header = ITERATIONS_HEADER.search(text)
        refined = read_embedding(text, name=raw.name)
        if header is None or refined.edges != raw.edges:
            raise EmbeddingReadError("Cached file %s does not match %s" % (path, raw))
        return refined, int(header.group(1))

    def _store(self, path, result):
        datacache.ensure_dir(self.cache_directory_path)
        with open(path, "w", encoding="utf-8") as f:
            f.write("# iterations %d\n" % result.iterations)
            f.write(write_embedding(result.embedding))

    def get_or_refine(
        self, name, segment_text, tol=DEFAULT_TOLERANCES, max_iter=200, overwrite=False
    ):
        """
        Build the embedding drawn by `segment_text` and return its
        refinement, reading it from the cache when present.

        Returns
        -------
        RefineResult relative to the freshly built embedding.
        """
        raw = build_embedding(parse_segments(segment_text, source_name=name), tol, name=name)
        path = self.cached_path(name, segment_text, tol, max_iter)
        if exists(path) and not overwrite:
            try:
                refined, iterations = self._load(path, raw)
            except (EmbeddingReadError, ValueError) as e:
                logger.warning("Ignoring cached file %s: %s", path, e)
            else:
                logger.info("Loaded refined %s from %s", raw, path)
                return RefineResult(
                    embedding=refined,
                    iterations=iterations,
                    initial_residual=residual(raw),
                    final_residual=residual(refined),
                    converged=residual(refined) <= tol.unit_tol_refined,
                    displacement=float(
                        np.max(np.linalg.norm(refined.coordinates - raw.coordinates, axis=1))
                    ),
                )
        result = refine(raw, tol, max_iter)
        if result.converged:
            try:
                self._store(path, result)
            except OSError as e:
                logger.warning("Could not cache refined %s at %s: %s", raw, path, e)
        return result

    def delete_cached_files(self, prefixes=(), suffixes=()):
        """
        Deletes any cached files matching the prefixes or suffixes given
        """
        if isdir(self.cache_directory_path):
            for filename in listdir(self.cache_directory_path):
                delete = any([filename.endswith(ext) for ext in suffixes]) or any(
                    [filename.startswith(pre) for pre in prefixes]
                )
                if delete:
                    path = join(self.cache_directory_path, filename)
                    logger.info("Deleting %s", path)
                    remove(path)

    def delete_cache_directory(self):
        if isdir(self.cache_directory_path):
            rmtree(self.cache_directory_path)
