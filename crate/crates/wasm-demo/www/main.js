import init, { noise_summary, round_trip, trajectories } from "./pkg/pab2g_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function report(id, text, isError) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "stats err" : "stats";
}

function gaussian(x) {
  return Math.exp(-0.5 * x * x) / Math.sqrt(2 * Math.PI);
}

function drawHistogram(summary) {
  const c = $("n-canvas");
  const ctx = c.getContext("2d");
  const d = summary.densities();
  const [lo, hi] = [-4, 4];
  const sx = (x) => ((x - lo) / (hi - lo)) * c.width;
  const sy = (y) => c.height - (y / 0.5) * (c.height - 10);
  ctx.clearRect(0, 0, c.width, c.height);
  ctx.fillStyle = "#7aa6d6";
  const w = c.width / d.length;
  d.forEach((v, i) => ctx.fillRect(i * w, sy(v), Math.max(w - 1, 1), c.height - sy(v)));
  ctx.strokeStyle = "#c33";
  ctx.beginPath();
  for (let px = 0; px <= c.width; px++) {
    const x = lo + (px / c.width) * (hi - lo);
    px === 0 ? ctx.moveTo(px, sy(gaussian(x))) : ctx.lineTo(px, sy(gaussian(x)));
  }
  ctx.stroke();
  ctx.strokeStyle = "rgba(0,0,0,0.25)";
  for (const q of summary.quantile_images()) {
    ctx.beginPath();
    ctx.moveTo(sx(q), 0);
    ctx.lineTo(sx(q), c.height);
    ctx.stroke();
  }
}

function runNoise() {
  const s = noise_summary(num("n-mode") === 1, num("n-l"), num("n-dg"), num("n-k"), num("n-seed"), 200);
  const err = s.error();
  if (err) {
    report("n-stats", err, true);
  } else {
    drawHistogram(s);
    report(
      "n-stats",
      `K-S D = ${s.ks_statistic.toFixed(5)}  p = ${s.p_value.toFixed(4)}  ` +
        `${s.accept ? "normal at 5%" : "rejected at 5%"}\n` +
        `mean = ${s.mean.toFixed(5)}  variance = ${s.variance.toFixed(5)}  correction steps = ${s.iterations}`,
      false,
    );
  }
  s.free();
}

function drawStego(values) {
  const c = $("t-canvas");
  const ctx = c.getContext("2d");
  const side = Math.round(Math.sqrt(values.length));
  const img = ctx.createImageData(side, side);
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    lo = Math.min(lo, v);
    hi = Math.max(hi, v);
  }
  values.forEach((v, i) => {
    const g = hi > lo ? Math.round((255 * (v - lo)) / (hi - lo)) : 128;
    img.data.set([g, g, g, 255], 4 * i);
  });
  const tmp = new OffscreenCanvas(side, side);
  tmp.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(tmp, 0, 0, c.width, c.height);
}

function runTrip() {
  const r = round_trip($("t-msg").value, $("t-key").value, num("t-l"), num("t-dg"), num("t-std"), num("t-q"));
  const err = r.error();
  const stego = r.stego();
  if (stego.length) drawStego(stego);
  const lines = [`capacity ${r.capacity_bytes} bytes`];
  if (stego.length) {
    lines.push(`bit accuracy ${(100 * r.bit_accuracy).toFixed(2)}%  correction steps ${r.iterations}`);
  }
  const rec = r.recovered();
  if (rec !== undefined) lines.push(`recovered: ${rec}`);
  if (err) lines.push(err);
  report("t-stats", lines.join("\n"), Boolean(err));
  r.free();
}

function runFlow() {
  const t = trajectories($("f-field").value, num("f-paths"), num("f-steps"));
  const err = t.error();
  if (err) {
    report("f-stats", err, true);
    t.free();
    return;
  }
  const times = t.times();
  const states = t.states();
  const n = times.length;
  const c = $("f-canvas");
  const ctx = c.getContext("2d");
  ctx.clearRect(0, 0, c.width, c.height);
  // log time axis, T on the left; state axis clipped to [-6, 6]
  const lt = times.map((x) => Math.log10(x));
  const sx = (i) => ((lt[0] - lt[i]) / (lt[0] - lt[n - 1])) * (c.width - 1);
  const sy = (y) => c.height / 2 - (Math.max(-6, Math.min(6, y)) / 6) * (c.height / 2 - 4);
  ctx.strokeStyle = "rgba(40,90,160,0.6)";
  for (let p = 0; p < t.paths; p++) {
    ctx.beginPath();
    for (let i = 0; i < n; i++) {
      const y = sy(states[p * n + i]);
      i === 0 ? ctx.moveTo(sx(i), y) : ctx.lineTo(sx(i), y);
    }
    ctx.stroke();
  }
  const ends = Array.from({ length: t.paths }, (_, p) => states[p * n + n - 1]);
  report(
    "f-stats",
    `t from ${times[0]} to ${times[n - 1]} (log scale)\nfinal states: ${ends.map((x) => x.toFixed(2)).join(" ")}`,
    false,
  );
  t.free();
}

await init();
$("n-run").onclick = runNoise;
$("t-run").onclick = runTrip;
$("f-run").onclick = runFlow;
runNoise();
runTrip();
runFlow();
