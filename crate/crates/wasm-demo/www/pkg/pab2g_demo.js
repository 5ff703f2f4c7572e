/* @ts-self-types="./pab2g_demo.d.ts" */

export class NoiseSummary {
    static __wrap(ptr) {
        const obj = Object.create(NoiseSummary.prototype);
        obj.__wbg_ptr = ptr;
        NoiseSummaryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        NoiseSummaryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_noisesummary_free(ptr, 0);
    }
    /**
     * @returns {boolean}
     */
    get accept() {
        const ret = wasm.__wbg_get_noisesummary_accept(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * @returns {number}
     */
    get iterations() {
        const ret = wasm.__wbg_get_noisesummary_iterations(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get ks_statistic() {
        const ret = wasm.__wbg_get_noisesummary_ks_statistic(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get mean() {
        const ret = wasm.__wbg_get_noisesummary_mean(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get p_value() {
        const ret = wasm.__wbg_get_noisesummary_p_value(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get variance() {
        const ret = wasm.__wbg_get_noisesummary_variance(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    densities() {
        const ret = wasm.noisesummary_densities(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {string | undefined}
     */
    error() {
        const ret = wasm.noisesummary_error(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getStringFromWasm0(ret[0], ret[1]);
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * Noise-space positions of the quantiles, where clearance cuts gaps.
     * @returns {Float64Array}
     */
    quantile_images() {
        const ret = wasm.noisesummary_quantile_images(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @param {boolean} arg0
     */
    set accept(arg0) {
        wasm.__wbg_set_noisesummary_accept(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set iterations(arg0) {
        wasm.__wbg_set_noisesummary_iterations(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set ks_statistic(arg0) {
        wasm.__wbg_set_noisesummary_ks_statistic(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set mean(arg0) {
        wasm.__wbg_set_noisesummary_mean(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set p_value(arg0) {
        wasm.__wbg_set_noisesummary_p_value(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set variance(arg0) {
        wasm.__wbg_set_noisesummary_variance(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) NoiseSummary.prototype[Symbol.dispose] = NoiseSummary.prototype.free;

export class RoundTrip {
    static __wrap(ptr) {
        const obj = Object.create(RoundTrip.prototype);
        obj.__wbg_ptr = ptr;
        RoundTripFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        RoundTripFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_roundtrip_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get bit_accuracy() {
        const ret = wasm.__wbg_get_roundtrip_bit_accuracy(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get capacity_bytes() {
        const ret = wasm.__wbg_get_roundtrip_capacity_bytes(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get iterations() {
        const ret = wasm.__wbg_get_roundtrip_iterations(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get variance() {
        const ret = wasm.__wbg_get_roundtrip_variance(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {string | undefined}
     */
    error() {
        const ret = wasm.roundtrip_error(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getStringFromWasm0(ret[0], ret[1]);
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * @returns {string | undefined}
     */
    recovered() {
        const ret = wasm.roundtrip_recovered(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getStringFromWasm0(ret[0], ret[1]);
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * First channel of the stego tensor, row-major.
     * @returns {Float64Array}
     */
    stego() {
        const ret = wasm.roundtrip_stego(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @param {number} arg0
     */
    set bit_accuracy(arg0) {
        wasm.__wbg_set_roundtrip_bit_accuracy(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set capacity_bytes(arg0) {
        wasm.__wbg_set_roundtrip_capacity_bytes(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set iterations(arg0) {
        wasm.__wbg_set_roundtrip_iterations(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set variance(arg0) {
        wasm.__wbg_set_roundtrip_variance(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) RoundTrip.prototype[Symbol.dispose] = RoundTrip.prototype.free;

export class Trajectories {
    static __wrap(ptr) {
        const obj = Object.create(Trajectories.prototype);
        obj.__wbg_ptr = ptr;
        TrajectoriesFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        TrajectoriesFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_trajectories_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get paths() {
        const ret = wasm.__wbg_get_trajectories_paths(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @param {number} arg0
     */
    set paths(arg0) {
        wasm.__wbg_set_trajectories_paths(this.__wbg_ptr, arg0);
    }
    /**
     * @returns {string | undefined}
     */
    error() {
        const ret = wasm.trajectories_error(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getStringFromWasm0(ret[0], ret[1]);
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * `paths` rows of `times().len()` states each.
     * @returns {Float64Array}
     */
    states() {
        const ret = wasm.trajectories_states(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Grid times from `T` down to `epsilon`.
     * @returns {Float64Array}
     */
    times() {
        const ret = wasm.trajectories_times(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Trajectories.prototype[Symbol.dispose] = Trajectories.prototype.free;

/**
 * Encodes `k` random symbols and summarizes the noise.
 * @param {boolean} mode_ii
 * @param {number} l
 * @param {number} delta_g
 * @param {number} k
 * @param {number} seed
 * @param {number} bins
 * @returns {NoiseSummary}
 */
export function noise_summary(mode_ii, l, delta_g, k, seed, bins) {
    const ret = wasm.noise_summary(mode_ii, l, delta_g, k, seed, bins);
    return NoiseSummary.__wrap(ret);
}

/**
 * Hides `message`, optionally quantizes the sample, and extracts it again.
 * @param {string} message
 * @param {string} passphrase
 * @param {number} l
 * @param {number} delta_g
 * @param {number} field_std
 * @param {number} quantize_levels
 * @returns {RoundTrip}
 */
export function round_trip(message, passphrase, l, delta_g, field_std, quantize_levels) {
    const ptr0 = passStringToWasm0(message, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ptr1 = passStringToWasm0(passphrase, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len1 = WASM_VECTOR_LEN;
    const ret = wasm.round_trip(ptr0, len0, ptr1, len1, l, delta_g, field_std, quantize_levels);
    return RoundTrip.__wrap(ret);
}

/**
 * Integrates `paths` noise quantiles through a 1-D field given as
 * `zero`, `gaussian:MEAN:STD` or `mixture:W:MEAN:STD,...`.
 * @param {string} field
 * @param {number} paths
 * @param {number} steps
 * @returns {Trajectories}
 */
export function trajectories(field, paths, steps) {
    const ptr0 = passStringToWasm0(field, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.trajectories(ptr0, len0, paths, steps);
    return Trajectories.__wrap(ret);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./pab2g_demo_bg.js": import0,
    };
}

const NoiseSummaryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_noisesummary_free(ptr, 1));
const RoundTripFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_roundtrip_free(ptr, 1));
const TrajectoriesFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_trajectories_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('pab2g_demo_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
