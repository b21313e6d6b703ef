import init, { generateGraph, decompose, topR } from "./pkg/hotruss_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");

let layout = null; // { key, pos: [[x, y]] }

function color(k, kMax) {
  const t = kMax > 2 ? (k - 2) / (kMax - 2) : 1;
  return `hsl(${220 - 220 * t}, 70%, ${55 - 15 * t}%)`;
}

// Spring layout, recomputed only when the edge list changes.
function place(vertices, edges) {
  const key = $("edges").value;
  if (layout && layout.key === key && layout.pos.length === vertices) return layout.pos;
  const pos = Array.from({ length: vertices }, (_, i) => {
    const a = (2 * Math.PI * i) / vertices;
    return [Math.cos(a) * 0.5, Math.sin(a) * 0.5];
  });
  const ideal = 1.2 / Math.sqrt(Math.max(vertices, 1));
  for (let step = 0; step < 300; step++) {
    const force = pos.map(() => [0, 0]);
    for (let i = 0; i < vertices; i++) {
      for (let j = i + 1; j < vertices; j++) {
        const dx = pos[i][0] - pos[j][0], dy = pos[i][1] - pos[j][1];
        const d2 = dx * dx + dy * dy + 1e-4;
        const f = (ideal * ideal) / d2;
        force[i][0] += dx * f; force[i][1] += dy * f;
        force[j][0] -= dx * f; force[j][1] -= dy * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u][0] - pos[v][0], dy = pos[u][1] - pos[v][1];
      const d = Math.sqrt(dx * dx + dy * dy) + 1e-6;
      const f = d / ideal;
      force[u][0] -= dx * f; force[u][1] -= dy * f;
      force[v][0] += dx * f; force[v][1] += dy * f;
    }
    const cool = 0.02 * (1 - step / 300);
    for (let i = 0; i < vertices; i++) {
      const [fx, fy] = force[i];
      const len = Math.sqrt(fx * fx + fy * fy) + 1e-9;
      pos[i][0] += (fx / len) * Math.min(len, 1) * cool * 5;
      pos[i][1] += (fy / len) * Math.min(len, 1) * cool * 5;
    }
  }
  layout = { key, pos };
  return pos;
}

function draw(vertices, edges, styleOf) {
  const pos = place(vertices, edges.map((e) => e.pair));
  let [minX, minY, maxX, maxY] = [Infinity, Infinity, -Infinity, -Infinity];
  for (const [x, y] of pos) {
    minX = Math.min(minX, x); maxX = Math.max(maxX, x);
    minY = Math.min(minY, y); maxY = Math.max(maxY, y);
  }
  const pad = 20, w = canvas.width - 2 * pad;
  const scale = w / Math.max(maxX - minX, maxY - minY, 1e-6);
  const at = (i) => [pad + (pos[i][0] - minX) * scale, pad + (pos[i][1] - minY) * scale];
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const sorted = [...edges].sort((a, b) => a.rank - b.rank);
  for (const e of sorted) {
    const [x1, y1] = at(e.pair[0]), [x2, y2] = at(e.pair[1]);
    const s = styleOf(e);
    ctx.strokeStyle = s.color;
    ctx.lineWidth = s.width;
    ctx.beginPath(); ctx.moveTo(x1, y1); ctx.lineTo(x2, y2); ctx.stroke();
  }
  ctx.fillStyle = "#333";
  for (let i = 0; i < vertices; i++) {
    const [x, y] = at(i);
    ctx.beginPath(); ctx.arc(x, y, 2.5, 0, 2 * Math.PI); ctx.fill();
  }
}

function legend(kMax, levels) {
  $("legend").innerHTML = levels
    .map((k) => `<span style="background:${color(k, kMax)}">${k}</span>`)
    .join("");
}

function table(rows) {
  return "<table>" + rows.map((r, i) =>
    "<tr>" + r.map((c) => (i === 0 ? `<th>${c}</th>` : `<td>${c}</td>`)).join("") + "</tr>").join("") + "</table>";
}

function guarded(fn) {
  return () => {
    $("error").textContent = "";
    try { fn(); } catch (err) { $("error").textContent = String(err); }
  };
}

function runDecompose() {
  const tau = Number($("tau").value);
  const out = JSON.parse(decompose($("edges").value, tau));
  const kMax = out.k_max ?? 2;
  const edges = out.edges.map((e) => ({ pair: [e.u, e.v], phi: e.phi, rank: e.phi }));
  draw(out.vertices.length, edges, (e) => ({ color: color(e.phi, kMax), width: 1 + (2 * (e.phi - 2)) / Math.max(kMax - 2, 1) }));
  legend(kMax, [...new Set(edges.map((e) => e.phi))].sort((a, b) => a - b));
  const keys = ["support_recomputations", "bfs_traversals", "vertices_pruned", "delayed_skips", "unchanged_skips"];
  $("summary").innerHTML =
    `<p>${out.edges.length} edges, largest truss number ${out.k_max ?? "none"} at &tau; = ${tau}. ` +
    `Lower-bound approximation error ${out.lower_bound_error.toFixed(3)}. ` +
    `Engines ${out.agree ? "agree" : "DISAGREE"}.</p>` +
    table([["counter", "baseline", "optimized"], ...keys.map((k) => [k, out.baseline[k], out.optimized[k]])]);
}

function runTopR() {
  const tau = Number($("tau").value);
  const r = Number($("r").value);
  const text = $("edges").value;
  const full = JSON.parse(decompose(text, tau));
  const out = JSON.parse(topR(text, tau, r));
  const best = new Map();
  for (const level of out.levels) {
    for (const [u, v] of level.edges) {
      const key = `${u},${v}`;
      if (!best.has(key)) best.set(key, level.k);
    }
  }
  const kMax = out.k_max ?? 2;
  const edges = full.edges.map((e) => {
    const k = best.get(`${e.u},${e.v}`);
    return { pair: [e.u, e.v], k, rank: k ?? 0 };
  });
  draw(full.vertices.length, edges, (e) =>
    e.k ? { color: color(e.k, kMax), width: 2.5 } : { color: "#ddd", width: 1 });
  legend(kMax, out.levels.map((l) => l.k).reverse());
  $("summary").innerHTML =
    `<p>Top ${r} level(s) below k_max = ${out.k_max ?? "none"}: ` +
    out.levels.map((l) => `k=${l.k}: ${l.edges.length} edges`).join(", ") + ".</p>" +
    table([["counter", "top-r"], ...Object.entries(out.stats)]);
}

function runGenerate() {
  $("edges").value = generateGraph($("kind").value, Number($("n").value), Number($("m").value), Number($("seed").value));
  runDecompose();
}

await init();
$("tau").addEventListener("input", () => { $("tau-value").textContent = $("tau").value; guarded(runDecompose)(); });
$("generate").addEventListener("click", guarded(runGenerate));
$("decompose").addEventListener("click", guarded(runDecompose));
$("top-r").addEventListener("click", guarded(runTopR));
guarded(runGenerate)();
