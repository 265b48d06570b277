"""Pure-Python online suffix-automaton construction kernel.

Shares its return contract with the compiled ``_fastdawg`` extension:
``build_online(text) -> (lens, links, adj, samples, spine)`` where

* ``lens[v]``   length of the longest string of node ``v``,
* ``links[v]``  suffix link (-1 for the source),
* ``adj[v]``    transition dict ``{rank: target}`` (unordered),
* ``samples[v]`` one 0-based ending position in ``text`` of the longest
  string of ``v``,
* ``spine[p]``  node of the length-``p`` prefix of ``text``.
"""

from __future__ import annotations

BACKEND = "pure"


def build_online(text):
    lens = [0]
    links = [-1]
    adj = [{}]
    samples = [-1]
    spine = [0]
    last = 0
    for pos, c in enumerate(text):
        cur = len(lens)
        lens.append(lens[last] + 1)
        links.append(-1)
        adj.append({})
        samples.append(pos)
        p = last
        while p != -1 and c not in adj[p]:
            adj[p][c] = cur
            p = links[p]
        if p == -1:
            links[cur] = 0
        else:
            q = adj[p][c]
            if lens[p] + 1 == lens[q]:
                links[cur] = q
            else:
                clone = len(lens)
                lens.append(lens[p] + 1)
                links.append(links[q])
                adj.append(dict(adj[q]))
                samples.append(pos)
                while p != -1 and adj[p].get(c) == q:
                    adj[p][c] = clone
                    p = links[p]
                links[q] = clone
                links[cur] = clone
        last = cur
        spine.append(last)
    return lens, links, adj, samples, spine
